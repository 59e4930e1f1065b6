#include <tdeg/bounds.hpp>
#include <tdeg/scalar_text.hpp>

#include <algorithm>
#include <charconv>
#include <thread>

namespace tdeg {

TensorExpr TensorExpr::diag(int n) {
    if (n < 1) throw InvalidParameter("diag needs n >= 1");
    TensorExpr e;
    e.kind_ = Kind::diag;
    e.param_ = n;
    return e;
}

TensorExpr TensorExpr::cw(int q) {
    if (q < 1) throw InvalidParameter("cw needs q >= 1");
    TensorExpr e;
    e.kind_ = Kind::cw;
    e.param_ = q;
    return e;
}

TensorExpr TensorExpr::cw_easy(int q) {
    if (q < 1) throw InvalidParameter("cweasy needs q >= 1");
    TensorExpr e;
    e.kind_ = Kind::cw_easy;
    e.param_ = q;
    return e;
}

TensorExpr TensorExpr::struct_algebra(std::shared_ptr<const AlgebraStruct> algebra, std::string name) {
    if (!algebra) throw InvalidParameter("null algebra");
    TensorExpr e;
    e.kind_ = Kind::struct_algebra;
    e.algebra_ = std::move(algebra);
    e.name_ = std::move(name);
    return e;
}

TensorExpr TensorExpr::pow(TensorExpr base, int n) {
    if (n < 1) throw InvalidParameter("pow needs n >= 1");
    TensorExpr e;
    e.kind_ = Kind::pow;
    e.param_ = n;
    e.children_.push_back(std::make_shared<TensorExpr>(std::move(base)));
    return e;
}

TensorExpr TensorExpr::kron(TensorExpr a, TensorExpr b) {
    TensorExpr e;
    e.kind_ = Kind::kron;
    e.children_.push_back(std::make_shared<TensorExpr>(std::move(a)));
    e.children_.push_back(std::make_shared<TensorExpr>(std::move(b)));
    return e;
}

std::string TensorExpr::to_string() const {
    switch (kind_) {
        case Kind::diag:
            return "diag:n=" + std::to_string(param_);
        case Kind::cw:
            return "cw:q=" + std::to_string(param_);
        case Kind::cw_easy:
            return "cweasy:q=" + std::to_string(param_);
        case Kind::struct_algebra:
            return name_;
        case Kind::pow:
            return "pow:" + child(0).to_string() + ":n=" + std::to_string(param_);
        case Kind::kron:
            return "kron(" + child(0).to_string() + "," + child(1).to_string() + ")";
    }
    return "?";
}

Tensor3<Rational> TensorExpr::materialize(const Limits& limits) const {
    auto check = [&](const Tensor3<Rational>& t) {
        if (t.cell_count() > limits.max_cells) throw DimensionOverflow("materialized tensor exceeds the cell budget");
        return t;
    };
    switch (kind_) {
        case Kind::diag:
            return check(make_diag_tensor(param_));
        case Kind::cw:
            return check(make_cw_tensor(param_));
        case Kind::cw_easy:
            return check(make_cw_easy_tensor(param_));
        case Kind::struct_algebra:
            return check(algebra_->structure_tensor());
        case Kind::pow:
            return kron_power(child(0).materialize(limits), param_, limits.max_cells);
        case Kind::kron:
            return tdeg::kron(child(0).materialize(limits), child(1).materialize(limits), limits.max_cells);
    }
    throw Error("internal: unknown expression kind");
}

bool TensorExpr::symmetric_under_factor_permutation() const {
    switch (kind_) {
        case Kind::diag:
        case Kind::cw:
        case Kind::cw_easy:
            return true;
        case Kind::struct_algebra:
            return false;
        case Kind::pow:
            return child(0).symmetric_under_factor_permutation();
        case Kind::kron:
            return child(0).symmetric_under_factor_permutation() && child(1).symmetric_under_factor_permutation();
    }
    return false;
}

namespace {

int parse_int_param(std::string_view text, std::string_view key, std::string_view whole) {
    if (text.substr(0, key.size()) != key)
        throw ParseError("bad tensor expression \"" + std::string(whole) + "\": expected " + std::string(key));
    text.remove_prefix(key.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
        throw ParseError("bad integer parameter in tensor expression \"" + std::string(whole) + "\"");
    return value;
}

} // namespace

TensorExpr parse_tensor_expr(std::string_view text) {
    std::string_view whole = text;
    if (text.substr(0, 4) == "pow:") {
        std::string_view rest = text.substr(4);
        size_t split = rest.rfind(":n=");
        if (split == std::string_view::npos)
            throw ParseError("bad tensor expression \"" + std::string(whole) + "\": pow needs :n=");
        int n = parse_int_param(rest.substr(split + 1), "n=", whole);
        return TensorExpr::pow(parse_tensor_expr(rest.substr(0, split)), n);
    }
    if (text.substr(0, 5) == "diag:") return TensorExpr::diag(parse_int_param(text.substr(5), "n=", whole));
    if (text.substr(0, 3) == "cw:") return TensorExpr::cw(parse_int_param(text.substr(3), "q=", whole));
    if (text.substr(0, 7) == "cweasy:") return TensorExpr::cw_easy(parse_int_param(text.substr(7), "q=", whole));
    if (text.substr(0, 6) == "cwalg:") {
        int q = parse_int_param(text.substr(6), "q=", whole);
        return TensorExpr::struct_algebra(std::make_shared<AlgebraStruct>(make_cw_algebra(q)),
                                          "cwalg:q=" + std::to_string(q));
    }
    throw ParseError("unknown tensor expression \"" + std::string(whole) + "\"");
}

std::string to_string(Grade g) {
    switch (g) {
        case Grade::proved:
            return "proved";
        case Grade::witness:
            return "witness";
        case Grade::finite_field_evidence:
            return "finite-field-evidence";
        case Grade::conditional:
            return "conditional";
    }
    return "?";
}

std::uint64_t tensor_hash(const Tensor3<Rational>& t) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= '|';
        h *= 1099511628211ULL;
    };
    for (int d : t.dims()) mix(std::to_string(d));
    for (const auto& [idx, v] : t) {
        for (int x : idx) mix(std::to_string(x));
        mix(to_string(v));
    }
    return h;
}

MWitness m_upper(const Tensor3<Rational>& t, const Vec<Rational>& u) {
    bool all_zero = true;
    for (const auto& x : u) all_zero = all_zero && is_zero(x);
    if (all_zero) throw ZeroVector("slice witness must be nonzero");
    return MWitness{u, matrix_rank(contract(t, 1, u))};
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct FfEntry {
    int i, j, k;
    std::uint64_t v;
};

// Row echelon rank mod p with an abort bound: once at least `bound` pivots
// are found the true rank cannot improve the running minimum, so stop.
int ff_rank(std::vector<std::uint64_t>& m, int rows, int cols, std::uint64_t p, int bound) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r) * cols + c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j)
                std::swap(m[static_cast<size_t>(pivot) * cols + j], m[static_cast<size_t>(rank) * cols + j]);
        std::uint64_t inv = mod_pow(m[static_cast<size_t>(rank) * cols + c], p - 2, p);
        for (int r = rank + 1; r < rows; ++r) {
            std::uint64_t lead = m[static_cast<size_t>(r) * cols + c];
            if (lead == 0) continue;
            std::uint64_t f = lead * inv % p;
            for (int j = c; j < cols; ++j) {
                std::uint64_t sub = f * m[static_cast<size_t>(rank) * cols + j] % p;
                std::uint64_t& cell = m[static_cast<size_t>(r) * cols + j];
                cell = (cell + p - sub) % p;
            }
        }
        ++rank;
        if (rank >= bound) return rank;
    }
    return rank;
}

// Decodes projective representative t: the first nonzero coordinate is 1 at
// position f, free base-p digits fill the tail.
void decode_rep(std::uint64_t t, const std::vector<std::uint64_t>& block_start, std::uint64_t p, int n,
                std::vector<std::uint64_t>& u) {
    int f = 0;
    while (f + 1 < n && t >= block_start[static_cast<size_t>(f + 1)]) ++f;
    std::uint64_t offset = t - block_start[static_cast<size_t>(f)];
    std::fill(u.begin(), u.end(), 0);
    u[static_cast<size_t>(f)] = 1;
    for (int pos = n - 1; pos > f; --pos) {
        u[static_cast<size_t>(pos)] = offset % p;
        offset /= p;
    }
}

} // namespace

FfSearchResult m_exhaustive_ff_search(const Tensor3<Rational>& t, long p, const Limits& limits, int jobs) {
    if (!is_prime(p) || p > (1L << 20)) throw BadPrime("p must be a prime below 2^20");
    const std::uint64_t up = static_cast<std::uint64_t>(p);

    std::vector<FfEntry> entries;
    entries.reserve(t.nnz());
    for (const auto& [idx, v] : t) {
        std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), up);
        if (den == 0) throw BadPrime("p divides a cleared denominator");
        std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), up);
        entries.push_back({idx[0], idx[1], idx[2], num * mod_pow(den, up - 2, up) % up});
    }

    const int n = t.dims()[0], rows = t.dims()[1], cols = t.dims()[2];
    // one representative per projective point: (p^n - 1) / (p - 1) vectors
    std::vector<std::uint64_t> block_start(static_cast<size_t>(n) + 1);
    std::uint64_t count = 0;
    for (int f = 0; f < n; ++f) {
        block_start[static_cast<size_t>(f)] = count;
        std::uint64_t block = 1;
        for (int e = 0; e < n - 1 - f; ++e) {
            block *= up;
            if (block > limits.max_ff_evals) throw BudgetExceeded("finite-field sweep exceeds the evaluation budget");
        }
        count += block;
        if (count > limits.max_ff_evals) throw BudgetExceeded("finite-field sweep exceeds the evaluation budget");
    }
    block_start[static_cast<size_t>(n)] = count;

    struct Best {
        int rank;
        std::uint64_t at;
    };
    auto sweep = [&](std::uint64_t lo, std::uint64_t hi) {
        Best best{rows < cols ? rows : cols, count};
        best.rank += 1; // worse than any achievable rank
        std::vector<std::uint64_t> u(static_cast<size_t>(n));
        std::vector<std::uint64_t> slice(static_cast<size_t>(rows) * cols);
        for (std::uint64_t t_idx = lo; t_idx < hi; ++t_idx) {
            decode_rep(t_idx, block_start, up, n, u);
            std::fill(slice.begin(), slice.end(), 0);
            for (const auto& e : entries) {
                std::uint64_t w = u[static_cast<size_t>(e.i)];
                if (w == 0) continue;
                std::uint64_t& cell = slice[static_cast<size_t>(e.j) * cols + e.k];
                cell = (cell + w * e.v) % up;
            }
            int r = ff_rank(slice, rows, cols, up, best.rank);
            if (r < best.rank) best = Best{r, t_idx};
            if (best.rank == 0) break;
        }
        return best;
    };

    jobs = std::max(1, jobs);
    Best best{0, 0};
    if (jobs == 1 || count < 1024) {
        best = sweep(0, count);
    } else {
        std::vector<Best> partial(static_cast<size_t>(jobs), Best{0, 0});
        std::vector<std::thread> pool;
        std::uint64_t chunk = (count + static_cast<std::uint64_t>(jobs) - 1) / static_cast<std::uint64_t>(jobs);
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
            std::uint64_t hi = std::min(count, lo + chunk);
            pool.emplace_back([&, w, lo, hi] { partial[static_cast<size_t>(w)] = sweep(lo, std::max(lo, hi)); });
        }
        for (auto& th : pool) th.join();
        // deterministic min-reduction on (rank, first index)
        best = partial[0];
        for (const auto& b : partial)
            if (b.rank < best.rank || (b.rank == best.rank && b.at < best.at)) best = b;
    }

    std::vector<std::uint64_t> u(static_cast<size_t>(n));
    decode_rep(best.at, block_start, up, n, u);
    FfSearchResult res;
    res.min_rank = best.rank;
    res.evaluated = count;
    res.witness.reserve(u.size());
    for (std::uint64_t x : u) res.witness.push_back(static_cast<int>(x));
    return res;
}

int m_exhaustive_ff(const Tensor3<Rational>& t, long p, const Limits& limits, int jobs) {
    return m_exhaustive_ff_search(t, p, limits, jobs).min_rank;
}

namespace {

bool is_cw_easy_leaf(const TensorExpr& e, int& q) {
    if (e.kind() != TensorExpr::Kind::cw_easy) return false;
    q = e.param();
    return true;
}

DerivationNode doubling_node(int q, const std::string& psi, int premise, long result) {
    return DerivationNode{"cw_doubling", Grade::proved,
                          "m(cweasy:q=" + std::to_string(q) + " (x) psi) >= 2*m(psi) for q >= 2; psi = " + psi +
                              ", so m >= " + std::to_string(result),
                          {premise}};
}

long structural_m_lower(const TensorExpr& expr, std::vector<DerivationNode>& nodes, const Limits& limits);

long generic_m_lower(const TensorExpr& expr, std::vector<DerivationNode>& nodes, const Limits& limits) {
    Tensor3<Rational> t = expr.materialize(limits);
    if (flattening_rank(t, 1) == t.dims()[0]) {
        nodes.push_back({"full_first_flattening", Grade::proved,
                         "mode-1 flattening of " + expr.to_string() +
                             " has full rank, so every nonzero slice is nonzero: m >= 1",
                         {}});
        return 1;
    }
    nodes.push_back({"trivial", Grade::proved, "no structural rule applies to " + expr.to_string() + "; m >= 0", {}});
    return 0;
}

long structural_m_lower(const TensorExpr& expr, std::vector<DerivationNode>& nodes, const Limits& limits) {
    int q = 0;
    if (is_cw_easy_leaf(expr, q) && q >= 2) {
        nodes.push_back({"unit_base", Grade::proved, "m of the trivial unit tensor is 1", {}});
        nodes.push_back(doubling_node(q, "unit", static_cast<int>(nodes.size()) - 1, 2));
        return 2;
    }
    if (expr.kind() == TensorExpr::Kind::pow && is_cw_easy_leaf(expr.child(0), q) && q >= 2) {
        nodes.push_back({"unit_base", Grade::proved, "m of the trivial unit tensor is 1", {}});
        long m = 1;
        for (int step = 0; step < expr.param(); ++step) {
            m *= 2;
            std::string psi = step == 0 ? "unit" : "cweasy:q=" + std::to_string(q) + " power " + std::to_string(step);
            nodes.push_back(doubling_node(q, psi, static_cast<int>(nodes.size()) - 1, m));
        }
        return m;
    }
    if (expr.kind() == TensorExpr::Kind::kron) {
        if (is_cw_easy_leaf(expr.child(0), q) && q >= 2) {
            long inner = structural_m_lower(expr.child(1), nodes, limits);
            nodes.push_back(doubling_node(q, expr.child(1).to_string(), static_cast<int>(nodes.size()) - 1, 2 * inner));
            return 2 * inner;
        }
        if (is_cw_easy_leaf(expr.child(1), q) && q >= 2) {
            long inner = structural_m_lower(expr.child(0), nodes, limits);
            nodes.push_back({"kron_commute", Grade::proved,
                             "m is invariant under swapping kron factors", {static_cast<int>(nodes.size()) - 1}});
            nodes.push_back(doubling_node(q, expr.child(0).to_string(), static_cast<int>(nodes.size()) - 1, 2 * inner));
            return 2 * inner;
        }
    }
    return generic_m_lower(expr, nodes, limits);
}

// yes / no / rejected-because-q-is-1
enum class CwMatch { no, yes, q1 };

CwMatch matches_cw_rule(const TensorExpr& expr) {
    int q = 0;
    if (is_cw_easy_leaf(expr, q)) return q >= 2 ? CwMatch::yes : CwMatch::q1;
    if (expr.kind() == TensorExpr::Kind::pow && is_cw_easy_leaf(expr.child(0), q))
        return q >= 2 ? CwMatch::yes : CwMatch::q1;
    if (expr.kind() == TensorExpr::Kind::kron) {
        int q0 = 0, q1v = 0;
        bool left = is_cw_easy_leaf(expr.child(0), q0);
        bool right = is_cw_easy_leaf(expr.child(1), q1v);
        if ((left && q0 >= 2) || (right && q1v >= 2)) return CwMatch::yes;
        if (left || right) return CwMatch::q1;
    }
    return CwMatch::no;
}

} // namespace

StructuralMBound cw_product_rule(const TensorExpr& expr, const Limits& limits) {
    switch (matches_cw_rule(expr)) {
        case CwMatch::no:
            throw RuleNotApplicable("expression has no easy-CW kron factor");
        case CwMatch::q1:
            throw RuleNotApplicable("the doubling rule requires q >= 2");
        case CwMatch::yes:
            break;
    }
    StructuralMBound out;
    out.m_lower = structural_m_lower(expr, out.nodes, limits);
    return out;
}

namespace {

Tensor3<Rational> bring_mode_first(const Tensor3<Rational>& t, int mode) {
    if (mode == 1) return t;
    if (mode != 2 && mode != 3) throw InvalidParameter("mode must be 1, 2 or 3");
    Dims3 d = t.dims();
    std::swap(d[0], d[static_cast<size_t>(mode - 1)]);
    Tensor3<Rational> out(d);
    for (const auto& [idx, v] : t) {
        Index3 j = idx;
        std::swap(j[0], j[static_cast<size_t>(mode - 1)]);
        out.set(j[0], j[1], j[2], v);
    }
    return out;
}

std::string format_vector(const Vec<Rational>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

// pure tensor products of factor witnesses, for pow/kron expressions
void factor_witnesses(const TensorExpr& expr, std::vector<Vec<Rational>>& out, size_t cap) {
    auto basis_of = [cap](int n, std::vector<Vec<Rational>>& dst) {
        for (int i = 0; i < n && dst.size() < cap; ++i) {
            Vec<Rational> u(static_cast<size_t>(n));
            u[static_cast<size_t>(i)] = 1;
            dst.push_back(std::move(u));
        }
    };
    auto kron_vec = [](const Vec<Rational>& a, const Vec<Rational>& b) {
        Vec<Rational> r(a.size() * b.size());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
        return r;
    };
    switch (expr.kind()) {
        case TensorExpr::Kind::diag:
            basis_of(expr.param(), out);
            break;
        case TensorExpr::Kind::cw:
            basis_of(expr.param() + 2, out);
            break;
        case TensorExpr::Kind::cw_easy:
            basis_of(expr.param() + 1, out);
            break;
        case TensorExpr::Kind::struct_algebra:
            basis_of(expr.algebra().dim(), out);
            break;
        case TensorExpr::Kind::pow: {
            std::vector<Vec<Rational>> inner;
            factor_witnesses(expr.child(0), inner, cap);
            for (const auto& w : inner) {
                if (out.size() >= cap) break;
                Vec<Rational> acc = w;
                for (int i = 1; i < expr.param(); ++i) acc = kron_vec(acc, w);
                out.push_back(std::move(acc));
            }
            break;
        }
        case TensorExpr::Kind::kron: {
            std::vector<Vec<Rational>> left, right;
            factor_witnesses(expr.child(0), left, cap);
            factor_witnesses(expr.child(1), right, cap);
            for (const auto& a : left)
                for (const auto& b : right) {
                    if (out.size() >= cap) return;
                    out.push_back(kron_vec(a, b));
                }
            break;
        }
    }
}

} // namespace

BoundReport substitution_bound(const TensorExpr& expr, const Limits& limits, std::uint64_t seed, int mode) {
    Tensor3<Rational> t = bring_mode_first(expr.materialize(limits), mode);
    const int n = t.dims()[0];

    BoundReport rep;
    rep.mode = mode;
    rep.dims = t.dims();
    rep.subject = expr.to_string();
    rep.subject_hash = tensor_hash(t);

    // proved lower end of m: structural rules only
    long m_lb = 0;
    std::vector<DerivationNode> nodes;
    if (mode == 1 || expr.symmetric_under_factor_permutation()) {
        try {
            StructuralMBound sb = cw_product_rule(expr, limits);
            m_lb = sb.m_lower;
            nodes = std::move(sb.nodes);
        } catch (const RuleNotApplicable&) {
        }
    }
    if (nodes.empty()) {
        if (flattening_rank(t, 1) == n) {
            m_lb = 1;
            nodes.push_back({"full_first_flattening", Grade::proved,
                             "mode-" + std::to_string(mode) +
                                 " flattening has full rank, so every nonzero slice is nonzero: m >= 1",
                             {}});
        } else {
            m_lb = 0;
            nodes.push_back({"trivial", Grade::proved, "the sliced flattening is rank deficient; only m >= 0", {}});
        }
    }
    const int m_chain_end = static_cast<int>(nodes.size()) - 1;

    // witness schedule for the upper end: basis vectors, pure products for
    // pow/kron, then seeded random vectors
    std::optional<long> m_ub;
    Vec<Rational> best_u;
    auto consider = [&](const Vec<Rational>& u) {
        if (static_cast<int>(u.size()) != n) return;
        bool zero = true;
        for (const auto& x : u) zero = zero && is_zero(x);
        if (zero) return;
        long r = m_upper(t, u).rank_value;
        if (!m_ub || r < *m_ub) {
            m_ub = r;
            best_u = u;
        }
    };
    for (int i = 0; i < n; ++i) {
        Vec<Rational> u(static_cast<size_t>(n));
        u[static_cast<size_t>(i)] = 1;
        consider(u);
    }
    if (expr.kind() == TensorExpr::Kind::pow || expr.kind() == TensorExpr::Kind::kron) {
        std::vector<Vec<Rational>> pure;
        factor_witnesses(expr, pure, 64);
        for (const auto& u : pure) consider(u);
    }
    DetRng rng(seed);
    for (int draw = 0; draw < 100; ++draw) {
        Vec<Rational> u(static_cast<size_t>(n));
        for (auto& x : u) x = Rational(rng.int_in(-3, 3));
        consider(u);
    }
    if (m_ub) {
        if (*m_ub < m_lb) throw Error("internal: witness contradicts the proved lower bound for m");
        nodes.push_back({"slice_witness", Grade::witness,
                         "slice at u = " + format_vector(best_u) + " has rank " + std::to_string(*m_ub) +
                             ", so m <= " + std::to_string(*m_ub),
                         {}});
    }

    rep.m = MInterval{m_lb, m_ub};
    rep.lower = n - 1 + m_lb;
    nodes.push_back({"slice_substitution", Grade::proved,
                     "border rank >= n - 1 + m = " + std::to_string(n) + " - 1 + " + std::to_string(m_lb) + " = " +
                         std::to_string(rep.lower),
                     {m_chain_end}});
    rep.derivation = std::move(nodes);
    return rep;
}

int flattening_bound(const Tensor3<Rational>& t) {
    int best = 0;
    for (int mode = 1; mode <= 3; ++mode) best = std::max(best, flattening_rank(t, mode));
    return best;
}

BoundReport flattening_report(const Tensor3<Rational>& t, std::string subject) {
    BoundReport rep;
    rep.lower = flattening_bound(t);
    rep.dims = t.dims();
    rep.subject = std::move(subject);
    rep.subject_hash = tensor_hash(t);
    rep.derivation.push_back({"flattening", Grade::proved,
                              "max flattening rank over the three modes is " + std::to_string(rep.lower) +
                                  "; border rank is at least that",
                              {}});
    return rep;
}

BoundReport subspace_restriction_bound(const Tensor3<Rational>& t, const std::vector<Vec<Rational>>& subspace_basis,
                                       const BoundReport& inner, bool assert_minimal) {
    const int n = t.dims()[0];
    const int d = static_cast<int>(subspace_basis.size());
    if (d < 1 || d > n) throw InvalidParameter("subspace dimension out of range");
    Matrix<Rational> b(d, n);
    for (int s = 0; s < d; ++s) {
        if (static_cast<int>(subspace_basis[static_cast<size_t>(s)].size()) != n)
            throw DimensionMismatch("subspace vector has wrong length");
        for (int i = 0; i < n; ++i) b(s, i) = subspace_basis[static_cast<size_t>(s)][static_cast<size_t>(i)];
    }
    if (matrix_rank(b) != d) throw DependentBasis("subspace basis is linearly dependent");

    Tensor3<Rational> restricted(d, t.dims()[1], t.dims()[2]);
    for (const auto& [idx, v] : t)
        for (int s = 0; s < d; ++s) {
            const Rational& w = b(s, idx[0]);
            if (!is_zero(w)) restricted.add(s, idx[1], idx[2], w * v);
        }

    if (inner.dims != restricted.dims() || inner.subject_hash != tensor_hash(restricted))
        throw InvalidParameter("inner bound does not describe the restricted tensor");

    BoundReport rep;
    rep.dims = t.dims();
    rep.subject = "restrict:d=" + std::to_string(d) + " of " + inner.subject;
    rep.subject_hash = tensor_hash(t);
    rep.lower = n - d + inner.lower;
    rep.derivation = inner.derivation;
    const int inner_end = static_cast<int>(rep.derivation.size()) - 1;
    std::string statement = "border rank >= n - d + R(T|U') = " + std::to_string(n) + " - " + std::to_string(d) +
                            " + " + std::to_string(inner.lower) + " = " + std::to_string(rep.lower);
    if (assert_minimal) {
        rep.derivation.push_back({"subspace_restriction", Grade::proved,
                                  statement + " (caller asserts U' attains the minimum over d-dim subspaces)",
                                  {inner_end}});
    } else {
        rep.derivation.push_back({"subspace_restriction", Grade::conditional,
                                  statement + " (conditional on the supplied subspace being minimizing)",
                                  {inner_end}});
    }
    return rep;
}

void upper_bound_from_cert(BoundReport& report, const TensorExpr& expr, const DecompCert& cert,
                           const Limits& limits) {
    Tensor3<Rational> t = expr.materialize(limits);
    DegenReport check = verify_decomposition(cert, t);
    if (!check.valid) throw CertificateInvalid("certificate does not verify against " + expr.to_string());
    if (!report.upper || cert.r < *report.upper) report.upper = cert.r;
    if (report.lower > *report.upper) throw Error("internal: proved lower bound exceeds a verified upper bound");
    report.derivation.push_back({"decomposition_certificate", Grade::proved,
                                 "verified " + std::to_string(cert.r) + "-term approximate decomposition: border rank <= " +
                                     std::to_string(cert.r),
                                 {}});
}

} // namespace tdeg

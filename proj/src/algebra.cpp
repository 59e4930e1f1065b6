#include <tdeg/algebra.hpp>

#include <algorithm>
#include <numeric>

namespace tdeg {

AlgebraStruct::AlgebraStruct(int dim, std::vector<std::string> basis_names,
                             std::vector<std::vector<Vec<Rational>>> table)
    : dim_(dim), basis_names_(std::move(basis_names)), table_(std::move(table)) {
    if (dim_ <= 0) throw InvalidParameter("algebra dimension must be positive");
    if (basis_names_.empty()) {
        basis_names_.reserve(static_cast<size_t>(dim_));
        for (int i = 0; i < dim_; ++i) basis_names_.push_back("b" + std::to_string(i));
    }
    if (static_cast<int>(basis_names_.size()) != dim_) throw DimensionMismatch("basis name count != dim");
    if (static_cast<int>(table_.size()) != dim_) throw DimensionMismatch("structure table has wrong shape");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != dim_) throw DimensionMismatch("structure table has wrong shape");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("structure table has wrong shape");
    }
}

std::optional<Vec<Rational>> AlgebraStruct::find_identity() {
    if (flags_.unital != Tri::unchecked) return identity_;
    // e is a two-sided identity iff it solves e*b_j = b_j and b_j*e = b_j for
    // all basis j; 2n^2 linear equations in n unknowns.
    const int n = dim_;
    Matrix<Rational> a(2 * n * n, n);
    Vec<Rational> b(static_cast<size_t>(2 * n * n));
    int row = 0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) a(row, i) = table(i, j)[static_cast<size_t>(k)];
            b[static_cast<size_t>(row)] = j == k ? 1 : 0;
            ++row;
            for (int i = 0; i < n; ++i) a(row, i) = table(j, i)[static_cast<size_t>(k)];
            b[static_cast<size_t>(row)] = j == k ? 1 : 0;
            ++row;
        }
    identity_ = solve_linear(a, b);
    flags_.unital = identity_ ? Tri::yes : Tri::no;
    return identity_;
}

const AlgebraFlags& AlgebraStruct::check_properties() {
    bool comm = true;
    for (int i = 0; i < dim_ && comm; ++i)
        for (int j = i + 1; j < dim_ && comm; ++j) comm = table(i, j) == table(j, i);
    flags_.commutative = comm ? Tri::yes : Tri::no;

    bool assoc = true;
    for (int i = 0; i < dim_ && assoc; ++i) {
        Vec<Rational> bi(static_cast<size_t>(dim_));
        bi[static_cast<size_t>(i)] = 1;
        for (int j = 0; j < dim_ && assoc; ++j) {
            const Vec<Rational>& ij = table(i, j);
            for (int k = 0; k < dim_ && assoc; ++k) {
                Vec<Rational> bk(static_cast<size_t>(dim_));
                bk[static_cast<size_t>(k)] = 1;
                assoc = mul(ij, bk) == mul(bi, table(j, k));
            }
        }
    }
    flags_.associative = assoc ? Tri::yes : Tri::no;

    find_identity();
    return flags_;
}

Tensor3<Rational> AlgebraStruct::structure_tensor() const {
    Tensor3<Rational> t(dim_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const auto& v = table(i, j);
            for (int k = 0; k < dim_; ++k) t.set(i, j, k, v[static_cast<size_t>(k)]);
        }
    return t;
}

BilinearMap make_bilinear_map(Tensor3<Rational> tensor, std::optional<Vec<Rational>> identity) {
    const auto& d = tensor.dims();
    if (d[0] != d[1] || d[1] != d[2]) throw DimensionMismatch("bilinear map tensor must be n x n x n");
    if (identity) {
        if (static_cast<int>(identity->size()) != d[0]) throw DimensionMismatch("identity has wrong length");
        AlgebraStruct a = algebra_from_tensor(tensor);
        for (int j = 0; j < d[0]; ++j) {
            Vec<Rational> bj(static_cast<size_t>(d[0]));
            bj[static_cast<size_t>(j)] = 1;
            if (a.mul(*identity, bj) != bj || a.mul(bj, *identity) != bj)
                throw NotUnital("claimed identity fails the unital law");
        }
    }
    return BilinearMap{std::move(tensor), std::move(identity)};
}

AlgebraStruct algebra_from_tensor(const Tensor3<Rational>& t, std::vector<std::string> basis_names) {
    const auto& d = t.dims();
    if (d[0] != d[1] || d[1] != d[2]) throw DimensionMismatch("structure tensor must be n x n x n");
    const int n = d[0];
    std::vector<std::vector<Vec<Rational>>> table(
        static_cast<size_t>(n), std::vector<Vec<Rational>>(static_cast<size_t>(n), Vec<Rational>(static_cast<size_t>(n))));
    for (const auto& [idx, v] : t) table[static_cast<size_t>(idx[0])][static_cast<size_t>(idx[1])][static_cast<size_t>(idx[2])] = v;
    return AlgebraStruct(n, std::move(basis_names), std::move(table));
}

AlgebraStruct make_diag_algebra(int n) {
    if (n < 1) throw InvalidParameter("diagonal algebra needs n >= 1");
    std::vector<std::vector<Vec<Rational>>> table(
        static_cast<size_t>(n), std::vector<Vec<Rational>>(static_cast<size_t>(n), Vec<Rational>(static_cast<size_t>(n))));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        table[static_cast<size_t>(i)][static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        names.push_back("e" + std::to_string(i));
    }
    return AlgebraStruct(n, std::move(names), std::move(table));
}

Tensor3<Rational> make_diag_tensor(int n) {
    if (n < 1) throw InvalidParameter("diagonal tensor needs n >= 1");
    Tensor3<Rational> t(n, n, n);
    for (int i = 0; i < n; ++i) t.set(i, i, i, Rational(1));
    return t;
}

AlgebraStruct make_cw_algebra(int q) {
    if (q < 1) throw InvalidParameter("cw algebra needs q >= 1");
    const int n = q + 2;
    std::vector<std::string> names;
    names.push_back("1");
    for (int i = 1; i <= q; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("x1^2");
    std::vector<std::vector<Vec<Rational>>> table(
        static_cast<size_t>(n), std::vector<Vec<Rational>>(static_cast<size_t>(n), Vec<Rational>(static_cast<size_t>(n))));
    auto unit = [&](int k) {
        Vec<Rational> v(static_cast<size_t>(n));
        v[static_cast<size_t>(k)] = 1;
        return v;
    };
    for (int j = 0; j < n; ++j) {
        table[0][static_cast<size_t>(j)] = unit(j);
        table[static_cast<size_t>(j)][0] = unit(j);
    }
    // x_i * x_i = x1^2, all other radical products vanish
    for (int i = 1; i <= q; ++i) table[static_cast<size_t>(i)][static_cast<size_t>(i)] = unit(n - 1);
    return AlgebraStruct(n, std::move(names), std::move(table));
}

Tensor3<Rational> make_cw_tensor(int q) {
    if (q < 1) throw InvalidParameter("cw tensor needs q >= 1");
    const int n = q + 2;
    Tensor3<Rational> t(n, n, n);
    for (int i = 1; i <= q; ++i) {
        t.set(0, i, i, Rational(1));
        t.set(i, 0, i, Rational(1));
        t.set(i, i, 0, Rational(1));
    }
    t.set(0, 0, n - 1, Rational(1));
    t.set(0, n - 1, 0, Rational(1));
    t.set(n - 1, 0, 0, Rational(1));
    return t;
}

Tensor3<Rational> make_cw_easy_tensor(int q) {
    if (q < 1) throw InvalidParameter("easy cw tensor needs q >= 1");
    const int n = q + 1;
    Tensor3<Rational> t(n, n, n);
    for (int i = 1; i <= q; ++i) {
        t.set(0, i, i, Rational(1));
        t.set(i, 0, i, Rational(1));
        t.set(i, i, 0, Rational(1));
    }
    return t;
}

RestrictionOperator<Rational> cw_easy_projection(int q) {
    Matrix<Rational> p(q + 1, q + 2);
    for (int i = 0; i <= q; ++i) p(i, i) = 1;
    return {p, p, p};
}

BilinearMap make_cw_easy_map(int q) {
    if (q < 1) throw InvalidParameter("easy cw map needs q >= 1");
    const int n = q + 1;
    // inputs (1, x_1..x_q), outputs (x_1..x_q, x_1^2)
    Tensor3<Rational> t(n, n, n);
    for (int i = 1; i <= q; ++i) {
        t.set(0, i, i - 1, Rational(1));
        t.set(i, 0, i - 1, Rational(1));
        t.set(i, i, n - 1, Rational(1));
    }
    return BilinearMap{std::move(t), std::nullopt};
}

RestrictionOperator<Rational> cw_easy_relabeling(int q) {
    const int n = q + 1;
    Matrix<Rational> id = Matrix<Rational>::identity(n);
    Matrix<Rational> p(n, n);
    for (int i = 1; i <= q; ++i) p(i - 1, i) = 1;
    p(n - 1, 0) = 1;
    return {id, id, p};
}

namespace {

std::string monomial_name(const std::vector<int>& exps) {
    std::string out;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

bool divides(const std::vector<int>& gen, const std::vector<int>& mono) {
    for (size_t i = 0; i < gen.size(); ++i)
        if (mono[i] < gen[i]) return false;
    return true;
}

} // namespace

AlgebraStruct make_monomial_quotient(int num_vars, const std::vector<std::vector<int>>& generators) {
    if (num_vars < 1) throw InvalidParameter("need at least one variable");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != num_vars) throw DimensionMismatch("generator exponent vector has wrong length");
        bool all_zero = true;
        for (int e : g) {
            if (e < 0) throw InvalidParameter("negative exponent in generator");
            all_zero = all_zero && e == 0;
        }
        if (all_zero) throw InvalidParameter("ideal contains the monomial 1");
    }

    // finite dimension iff every variable has a pure power among the generators
    std::vector<int> cap(static_cast<size_t>(num_vars), -1);
    for (const auto& g : generators) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < num_vars; ++i)
            if (g[static_cast<size_t>(i)] > 0) {
                if (var >= 0) pure = false;
                var = i;
            }
        if (pure && var >= 0) {
            int e = g[static_cast<size_t>(var)];
            if (cap[static_cast<size_t>(var)] < 0 || e < cap[static_cast<size_t>(var)]) cap[static_cast<size_t>(var)] = e;
        }
    }
    for (int i = 0; i < num_vars; ++i)
        if (cap[static_cast<size_t>(i)] < 0)
            throw InfiniteDimensional("no pure power of x" + std::to_string(i + 1) + " in the ideal");

    std::uint64_t box = 1;
    for (int i = 0; i < num_vars; ++i) {
        box *= static_cast<std::uint64_t>(cap[static_cast<size_t>(i)]);
        if (box > 1'000'000) throw BudgetExceeded("standard monomial box too large");
    }

    // standard monomials: below every cap and not divisible by any generator
    std::vector<std::vector<int>> basis;
    std::vector<int> cur(static_cast<size_t>(num_vars), 0);
    for (;;) {
        bool in_ideal = false;
        for (const auto& g : generators)
            if (divides(g, cur)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) basis.push_back(cur);
        int pos = num_vars - 1;
        while (pos >= 0) {
            if (++cur[static_cast<size_t>(pos)] < cap[static_cast<size_t>(pos)]) break;
            cur[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        return da != db ? da < db : a < b;
    });

    const int n = static_cast<int>(basis.size());
    std::vector<std::string> names;
    names.reserve(basis.size());
    for (const auto& m : basis) names.push_back(monomial_name(m));

    std::vector<std::vector<Vec<Rational>>> table(
        static_cast<size_t>(n), std::vector<Vec<Rational>>(static_cast<size_t>(n), Vec<Rational>(static_cast<size_t>(n))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> prod(static_cast<size_t>(num_vars));
            for (int v = 0; v < num_vars; ++v)
                prod[static_cast<size_t>(v)] = basis[static_cast<size_t>(i)][static_cast<size_t>(v)] +
                                               basis[static_cast<size_t>(j)][static_cast<size_t>(v)];
            bool in_ideal = false;
            for (const auto& g : generators)
                if (divides(g, prod)) {
                    in_ideal = true;
                    break;
                }
            if (in_ideal) continue;
            auto it = std::find(basis.begin(), basis.end(), prod);
            if (it == basis.end()) throw Error("internal: product monomial missing from basis");
            table[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(it - basis.begin())] = 1;
        }
    return AlgebraStruct(n, std::move(names), std::move(table));
}

} // namespace tdeg

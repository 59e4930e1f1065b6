#include <tdeg/degen.hpp>
#include <tdeg/scalar_text.hpp>

namespace tdeg {

DegenReport compare_to_target(const Tensor3<EpsScalar>& claimed, const Tensor3<Rational>& target) {
    if (claimed.dims() != target.dims()) throw DimensionMismatch("claimed and target formats differ");
    DegenReport rep;
    rep.valid = true;
    std::optional<long> min_val;
    auto ci = claimed.begin();
    auto ti = target.begin();
    auto consider = [&](const Index3& idx, const EpsScalar& have, const Rational& want) {
        EpsScalar diff = have - EpsScalar(want);
        if (diff.is_zero()) return;
        long v = *diff.valuation();
        if (!min_val || v < *min_val) min_val = v;
        if (v < 1) {
            rep.valid = false;
            if (!rep.first_mismatch)
                rep.first_mismatch =
                    EntryMismatch{idx, to_string(want), format_scalar(have)};
        }
    };
    while (ci != claimed.end() || ti != target.end()) {
        if (ti == target.end() || (ci != claimed.end() && ci->first < ti->first)) {
            consider(ci->first, ci->second, Rational(0));
            ++ci;
        } else if (ci == claimed.end() || ti->first < ci->first) {
            consider(ti->first, EpsScalar(), ti->second);
            ++ti;
        } else {
            consider(ci->first, ci->second, ti->second);
            ++ci;
            ++ti;
        }
    }
    rep.min_error_valuation = min_val;
    return rep;
}

bool verify_restriction(const RestrictionOperator<Rational>& op, const Tensor3<Rational>& t,
                        const Tensor3<Rational>& target) {
    if (op.f1.rows() != target.dims()[0] || op.f2.rows() != target.dims()[1] || op.f3.rows() != target.dims()[2])
        throw DimensionMismatch("operator output format differs from target format");
    return apply_restriction(op, t) == target;
}

DegenReport verify_degeneration(const RestrictionOperator<EpsScalar>& op, const Tensor3<Rational>& t,
                                const Tensor3<Rational>& target) {
    if (op.f1.rows() != target.dims()[0] || op.f2.rows() != target.dims()[1] || op.f3.rows() != target.dims()[2])
        throw DimensionMismatch("operator output format differs from target format");
    return compare_to_target(apply_restriction(op, promote(t)), target);
}

DegenReport verify_decomposition(const DecompCert& cert, const Tensor3<Rational>& target) {
    if (cert.target_dims != target.dims()) throw DimensionMismatch("certificate format differs from target format");
    if (cert.r != static_cast<int>(cert.terms.size())) throw DimensionMismatch("certificate r differs from term count");
    Tensor3<EpsScalar> sum(target.dims());
    for (const auto& term : cert.terms) {
        if (static_cast<int>(term.v1.size()) != target.dims()[0] ||
            static_cast<int>(term.v2.size()) != target.dims()[1] ||
            static_cast<int>(term.v3.size()) != target.dims()[2])
            throw DimensionMismatch("certificate vector length differs from target format");
        for (int i = 0; i < target.dims()[0]; ++i) {
            if (term.v1[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < target.dims()[1]; ++j) {
                if (term.v2[static_cast<size_t>(j)].is_zero()) continue;
                EpsScalar ij = term.v1[static_cast<size_t>(i)] * term.v2[static_cast<size_t>(j)];
                for (int k = 0; k < target.dims()[2]; ++k) {
                    if (term.v3[static_cast<size_t>(k)].is_zero()) continue;
                    sum.add(i, j, k, ij * term.v3[static_cast<size_t>(k)]);
                }
            }
        }
    }
    return compare_to_target(sum, target);
}

RestrictionOperator<EpsScalar> cert_to_operator(const DecompCert& cert) {
    auto columns = [&](auto member, int dim) {
        Matrix<EpsScalar> m(dim, cert.r);
        for (int s = 0; s < cert.r; ++s) {
            const Vec<EpsScalar>& v = cert.terms[static_cast<size_t>(s)].*member;
            if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("certificate vector length mismatch");
            for (int i = 0; i < dim; ++i) m(i, s) = v[static_cast<size_t>(i)];
        }
        return m;
    };
    return {columns(&DecompCert::Term::v1, cert.target_dims[0]),
            columns(&DecompCert::Term::v2, cert.target_dims[1]),
            columns(&DecompCert::Term::v3, cert.target_dims[2])};
}

DecompCert cw_certificate(int q) {
    if (q < 1) throw InvalidParameter("cw certificate needs q >= 1");
    const int n = q + 2;
    DecompCert cert;
    cert.r = q + 2;
    cert.target_dims = {n, n, n};

    const EpsScalar eps = EpsScalar::eps();
    auto vec = [&] { return Vec<EpsScalar>(static_cast<size_t>(n)); };

    // q terms eps^-2 (e0 + eps e1_i)^(x3)
    for (int i = 1; i <= q; ++i) {
        DecompCert::Term t;
        t.v1 = vec();
        t.v1[0] = EpsScalar::eps_power(-2);
        t.v1[static_cast<size_t>(i)] = EpsScalar::eps_power(-1);
        t.v2 = vec();
        t.v2[0] = EpsScalar(1);
        t.v2[static_cast<size_t>(i)] = eps;
        t.v3 = t.v2;
        cert.terms.push_back(std::move(t));
    }
    // -eps^-3 (e0 + eps^2 sum_i e1_i)^(x3)
    {
        DecompCert::Term t;
        t.v1 = vec();
        t.v1[0] = -EpsScalar::eps_power(-3);
        for (int i = 1; i <= q; ++i) t.v1[static_cast<size_t>(i)] = -EpsScalar::eps_power(-1);
        t.v2 = vec();
        t.v2[0] = EpsScalar(1);
        for (int i = 1; i <= q; ++i) t.v2[static_cast<size_t>(i)] = eps * eps;
        t.v3 = t.v2;
        cert.terms.push_back(std::move(t));
    }
    // (eps^-3 - q eps^-2) (e0 + eps^3 e2)^(x3)
    {
        EpsScalar coeff = EpsScalar::eps_power(-3) - EpsScalar(Rational(q)) * EpsScalar::eps_power(-2);
        DecompCert::Term t;
        t.v1 = vec();
        t.v1[0] = coeff;
        t.v1[static_cast<size_t>(n - 1)] = coeff * eps * eps * eps;
        t.v2 = vec();
        t.v2[0] = EpsScalar(1);
        t.v2[static_cast<size_t>(n - 1)] = eps * eps * eps;
        t.v3 = t.v2;
        cert.terms.push_back(std::move(t));
    }
    return cert;
}

namespace {

Vec<EpsScalar> kron_vec(const Vec<EpsScalar>& a, const Vec<EpsScalar>& b) {
    Vec<EpsScalar> out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

} // namespace

DecompCert power_certificate(const DecompCert& cert, int n, std::uint64_t max_scalars) {
    if (n < 1) throw InvalidParameter("power must be >= 1");
    if (n == 1) return cert;

    std::uint64_t terms = 1, len = 0;
    for (int i = 0; i < n; ++i) {
        terms *= static_cast<std::uint64_t>(cert.r);
        if (terms > max_scalars) throw DimensionOverflow("power certificate exceeds the size budget");
    }
    Dims3 dims{1, 1, 1};
    for (size_t f = 0; f < 3; ++f) {
        std::uint64_t d = 1;
        for (int i = 0; i < n; ++i) d *= static_cast<std::uint64_t>(cert.target_dims[f]);
        if (d > max_scalars) throw DimensionOverflow("power certificate exceeds the size budget");
        dims[f] = static_cast<int>(d);
        len += d;
    }
    if (terms * len > max_scalars) throw DimensionOverflow("power certificate exceeds the size budget");

    DecompCert out;
    out.r = static_cast<int>(terms);
    out.target_dims = dims;
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    for (;;) {
        DecompCert::Term t = cert.terms[static_cast<size_t>(tuple[0])];
        for (int i = 1; i < n; ++i) {
            const auto& src = cert.terms[static_cast<size_t>(tuple[static_cast<size_t>(i)])];
            t.v1 = kron_vec(t.v1, src.v1);
            t.v2 = kron_vec(t.v2, src.v2);
            t.v3 = kron_vec(t.v3, src.v3);
        }
        out.terms.push_back(std::move(t));
        int pos = n - 1;
        while (pos >= 0) {
            if (++tuple[static_cast<size_t>(pos)] < cert.r) break;
            tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

UnitalizeResult unitalize(const Tensor3<Rational>& t, const Vec<Rational>& alpha1, const Vec<Rational>& alpha2) {
    const auto& d = t.dims();
    if (d[0] != d[1] || d[1] != d[2]) throw DimensionMismatch("unitalize needs an n x n x n tensor");
    const int n = d[0];

    // slice isomorphisms: P1 maps factor-2 covectors to factor 3, P2 maps
    // factor-1 covectors to factor 3
    Matrix<Rational> p1 = contract(t, 1, alpha1).transpose();
    Matrix<Rational> p2 = contract(t, 2, alpha2).transpose();
    auto p1_inv = inverse(p1);
    if (!p1_inv) throw NotBindingWitness("factor-1 contraction is singular");
    auto p2_inv = inverse(p2);
    if (!p2_inv) throw NotBindingWitness("factor-2 contraction is singular");

    RestrictionOperator<Rational> op{p2_inv->transpose(), p1_inv->transpose(), Matrix<Rational>::identity(n)};
    Tensor3<Rational> phi = apply_restriction(op, t);

    Vec<Rational> e = p2.apply(alpha1);
    if (e != p1.apply(alpha2)) throw PipelineAssertionFailed("P2 a1 != P1 a2; witnesses are inconsistent");

    return UnitalizeResult{make_bilinear_map(std::move(phi), e), std::move(op), std::move(e)};
}

RestrictionOperator<EpsScalar> sandwich_triple(const AlgebraStruct& a_struct, const Vec<EpsScalar>& a,
                                               const Vec<EpsScalar>& b, const Vec<EpsScalar>& c) {
    Matrix<EpsScalar> la = a_struct.left_mult(a);
    Matrix<EpsScalar> lb = a_struct.left_mult(b);
    Matrix<EpsScalar> rb = a_struct.right_mult(b);
    Matrix<EpsScalar> rc = a_struct.right_mult(c);
    auto la_inv = inverse(la);
    if (!la_inv) throw NotInvertibleElement("a is not invertible in A(eps)");
    auto lb_inv = inverse(lb);
    if (!lb_inv) throw NotInvertibleElement("b is not invertible in A(eps)");
    auto rc_inv = inverse(rc);
    if (!rc_inv) throw NotInvertibleElement("c is not invertible in A(eps)");

    RestrictionOperator<EpsScalar> op{(la * rb).transpose(), (*lb_inv * rc).transpose(), *la_inv * *rc_inv};

    Tensor3<EpsScalar> st = promote(a_struct.structure_tensor());
    if (!(apply_restriction(op, st) == st))
        throw PipelineAssertionFailed("sandwich triple does not fix the structure tensor");
    return op;
}

DegenReport sandwich_check(const AlgebraStruct& algebra, const BilinearMap& phi, const Matrix<EpsScalar>& s) {
    const int n = algebra.dim();
    if (phi.tensor.dims()[0] != n) throw DimensionMismatch("map and algebra dimensions differ");
    if (s.rows() != n || s.cols() != n) throw DimensionMismatch("sandwich matrix has wrong shape");
    auto s_inv = inverse(s);
    if (!s_inv) {
        DegenReport rep;
        rep.valid = false;
        rep.note = "matrix is singular over the eps field";
        return rep;
    }
    auto column = [&](const Matrix<EpsScalar>& m, int c) {
        Vec<EpsScalar> v(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = m(r, c);
        return v;
    };
    Tensor3<EpsScalar> claimed(n, n, n);
    for (int a = 0; a < n; ++a) {
        Vec<EpsScalar> sa = column(s, a);
        for (int b = 0; b < n; ++b) {
            Vec<EpsScalar> w = s_inv->apply(algebra.mul(sa, column(s, b)));
            for (int k = 0; k < n; ++k) claimed.set(a, b, k, w[static_cast<size_t>(k)]);
        }
    }
    return compare_to_target(claimed, phi.tensor);
}

SandwichOperator normalize_unital_degeneration(const AlgebraStruct& algebra, const BilinearMap& phi,
                                               const Matrix<EpsScalar>& f, const Matrix<EpsScalar>& g,
                                               const Matrix<EpsScalar>& h) {
    if (!phi.identity) throw NotUnital("the map carries no identity element");
    const int n = algebra.dim();
    if (phi.tensor.dims()[0] != n) throw DimensionMismatch("map and algebra dimensions differ");
    if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n || h.rows() != n || h.cols() != n)
        throw DimensionMismatch("degeneration maps must be n x n");

    RestrictionOperator<EpsScalar> op{f.transpose(), g.transpose(), h};
    DegenReport input_check = verify_degeneration(op, algebra.structure_tensor(), phi.tensor);
    if (!input_check.valid) throw NotADegeneration("(F, G, H) is not a degeneration operator for the map");

    Vec<EpsScalar> e = promote(*phi.identity);
    Matrix<EpsScalar> l_fe = algebra.left_mult(f.apply(e));

    Matrix<EpsScalar> q = h * l_fe * g;
    if (!is_identity_plus_eps(q)) throw PipelineAssertionFailed("Q = H L_{Fe} G is not id + O(eps)");
    auto q_inv = inverse(q);
    if (!q_inv) throw PipelineAssertionFailed("Q is singular");
    Matrix<EpsScalar> g_hat = g * *q_inv;

    Matrix<EpsScalar> r_ge = algebra.right_mult(g_hat.apply(e));
    Matrix<EpsScalar> p = h * r_ge * f;
    if (!is_identity_plus_eps(p)) throw PipelineAssertionFailed("P = H R_{G'e} F is not id + O(eps)");

    auto s = inverse(h * l_fe * r_ge);
    if (!s) throw PipelineAssertionFailed("H L_{Fe} R_{G'e} is singular");

    DegenReport final_check = sandwich_check(algebra, phi, *s);
    if (!final_check.valid) throw PipelineAssertionFailed("normalized operator fails the sandwich property");
    return SandwichOperator{std::move(*s)};
}

Matrix<EpsScalar> cw_smoothing_matrix(int q) {
    if (q < 1) throw InvalidParameter("smoothing matrix needs q >= 1");
    const int n = q + 2;
    const EpsScalar eps = EpsScalar::eps();
    const EpsScalar eps2 = eps * eps;
    const EpsScalar eps3 = eps2 * eps;
    Matrix<EpsScalar> s(n, n);
    for (int r = 0; r < q; ++r) {
        s(r, 0) = EpsScalar(1);
        s(r, r + 1) = eps;
        s(r, n - 1) = -eps3;
    }
    s(q, 0) = EpsScalar(1);
    for (int c = 1; c <= q; ++c) s(q, c) = eps2;
    s(q, n - 1) = -eps3;
    s(n - 1, 0) = EpsScalar(1);
    return s;
}

DegenReport cw_smoothing_check(int q) {
    AlgebraStruct diag = make_diag_algebra(q + 2);
    AlgebraStruct cw = make_cw_algebra(q);
    Vec<Rational> one(static_cast<size_t>(q + 2));
    one[0] = 1;
    BilinearMap phi = make_bilinear_map(cw.structure_tensor(), one);
    return sandwich_check(diag, phi, cw_smoothing_matrix(q));
}

CwTransport cw_transported_degeneration(int q) {
    const int n = q + 2;
    Tensor3<Rational> t_cw = make_cw_tensor(q);
    RestrictionOperator<EpsScalar> cert_op = cert_to_operator(cw_certificate(q));

    Vec<Rational> alpha0(static_cast<size_t>(n));
    alpha0[0] = 1;
    UnitalizeResult uni = unitalize(t_cw, alpha0, alpha0);

    // dictionary: identity slot first, squared generator last (swap 0 <-> n-1)
    Matrix<Rational> pi(n, n);
    pi(0, n - 1) = 1;
    pi(n - 1, 0) = 1;
    for (int i = 1; i < n - 1; ++i) pi(i, i) = 1;

    Matrix<EpsScalar> d1 = promote(pi * uni.op.f1) * cert_op.f1;
    Matrix<EpsScalar> d2 = promote(pi * uni.op.f2) * cert_op.f2;
    Matrix<EpsScalar> d3 = promote(pi) * cert_op.f3;

    AlgebraStruct cw = make_cw_algebra(q);
    Vec<Rational> one(static_cast<size_t>(n));
    one[0] = 1;
    BilinearMap phi = make_bilinear_map(cw.structure_tensor(), one);

    return CwTransport{make_diag_algebra(n), std::move(phi), d1.transpose(), d2.transpose(), std::move(d3)};
}

} // namespace tdeg

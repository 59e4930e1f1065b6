#include <tdeg/tensor3.hpp>

namespace tdeg {

Tensor3<EpsScalar> promote(const Tensor3<Rational>& t) {
    Tensor3<EpsScalar> out(t.dims());
    for (const auto& [idx, v] : t) out.set(idx[0], idx[1], idx[2], EpsScalar(v));
    return out;
}

Tensor3<Rational> eval_at_zero(const Tensor3<EpsScalar>& t) {
    Tensor3<Rational> out(t.dims());
    for (const auto& [idx, v] : t) out.set(idx[0], idx[1], idx[2], v.eval_at_zero());
    return out;
}

std::optional<BindingWitnesses> find_binding_covectors(const Tensor3<Rational>& t, int max_attempts,
                                                       std::uint64_t seed) {
    const auto& d = t.dims();
    if (d[0] != d[1] || d[1] != d[2]) throw InvalidParameter("binding search needs an n x n x n tensor");
    const int n = d[0];

    auto full_rank = [&](int factor, const Vec<Rational>& alpha) {
        return matrix_rank(contract(t, factor, alpha)) == n;
    };

    std::optional<Vec<Rational>> a1, a2;
    for (int i = 0; i < n && !(a1 && a2); ++i) {
        Vec<Rational> basis(static_cast<size_t>(n), Rational(0));
        basis[static_cast<size_t>(i)] = 1;
        if (!a1 && full_rank(1, basis)) a1 = basis;
        if (!a2 && full_rank(2, basis)) a2 = basis;
    }

    DetRng rng(seed);
    for (int attempt = 0; attempt < max_attempts && !(a1 && a2); ++attempt) {
        auto draw = [&] {
            Vec<Rational> v(static_cast<size_t>(n));
            for (auto& x : v) x = Rational(rng.int_in(-3, 3));
            return v;
        };
        if (!a1) {
            Vec<Rational> v = draw();
            if (full_rank(1, v)) a1 = std::move(v);
        }
        if (!a2) {
            Vec<Rational> v = draw();
            if (full_rank(2, v)) a2 = std::move(v);
        }
    }

    if (a1 && a2) return BindingWitnesses{std::move(*a1), std::move(*a2)};
    return std::nullopt;
}

} // namespace tdeg

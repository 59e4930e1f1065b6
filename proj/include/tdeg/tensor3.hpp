#ifndef TDEG_TENSOR3_HPP
#define TDEG_TENSOR3_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include <tdeg/matrix.hpp>
#include <tdeg/rng.hpp>

namespace tdeg {

using Index3 = std::array<int, 3>;
using Dims3 = std::array<int, 3>;

// Sparse order-3 tensor with exact scalar entries. Zero entries are never
// stored, and entries iterate in lexicographic index order, so everything
// downstream (reports, file output) is deterministic.
template <typename T>
class Tensor3 {
public:
    using EntryMap = std::map<Index3, T>;

    Tensor3() : dims_{0, 0, 0} {}
    explicit Tensor3(Dims3 dims) : dims_(dims) {
        if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0) throw InvalidParameter("tensor dims must be positive");
    }
    Tensor3(int n1, int n2, int n3) : Tensor3(Dims3{n1, n2, n3}) {}

    const Dims3& dims() const { return dims_; }
    int dim(int factor) const { return dims_[static_cast<size_t>(factor - 1)]; }
    size_t nnz() const { return e_.size(); }
    std::uint64_t cell_count() const {
        return static_cast<std::uint64_t>(dims_[0]) * static_cast<std::uint64_t>(dims_[1]) *
               static_cast<std::uint64_t>(dims_[2]);
    }

    void set(int i, int j, int k, const T& v) {
        check_index(i, j, k);
        if (is_zero(v))
            e_.erase(Index3{i, j, k});
        else
            e_[Index3{i, j, k}] = v;
    }

    void add(int i, int j, int k, const T& v) {
        check_index(i, j, k);
        auto it = e_.find(Index3{i, j, k});
        if (it == e_.end()) {
            if (!is_zero(v)) e_.emplace(Index3{i, j, k}, v);
            return;
        }
        it->second += v;
        if (is_zero(it->second)) e_.erase(it);
    }

    T at(int i, int j, int k) const {
        check_index(i, j, k);
        auto it = e_.find(Index3{i, j, k});
        return it == e_.end() ? T() : it->second;
    }

    typename EntryMap::const_iterator begin() const { return e_.begin(); }
    typename EntryMap::const_iterator end() const { return e_.end(); }

    bool operator==(const Tensor3& o) const { return dims_ == o.dims_ && e_ == o.e_; }

private:
    void check_index(int i, int j, int k) const {
        if (i < 0 || i >= dims_[0] || j < 0 || j >= dims_[1] || k < 0 || k >= dims_[2])
            throw DimensionMismatch("tensor index out of range");
    }

    Dims3 dims_;
    EntryMap e_;
};

// Matrix slice sum_i covector_i * T(i,.,.) (and analogously for the other
// factors). Row/column indices of the result follow the remaining factors in
// order.
template <typename T>
Matrix<T> contract(const Tensor3<T>& t, int factor, const Vec<T>& covector) {
    if (factor < 1 || factor > 3) throw InvalidParameter("factor must be 1, 2 or 3");
    if (static_cast<int>(covector.size()) != t.dim(factor))
        throw DimensionMismatch("covector length does not match factor dimension");
    int r = factor == 1 ? t.dims()[1] : t.dims()[0];
    int c = factor == 3 ? t.dims()[1] : t.dims()[2];
    Matrix<T> m(r, c);
    for (const auto& [idx, v] : t) {
        const T& w = covector[static_cast<size_t>(idx[static_cast<size_t>(factor - 1)])];
        if (is_zero(w)) continue;
        int a = factor == 1 ? idx[1] : idx[0];
        int b = factor == 3 ? idx[1] : idx[2];
        m(a, b) += w * v;
    }
    return m;
}

// Mode-m unfolding; columns pair the remaining two indices row-major, the
// same convention kron uses.
template <typename T>
Matrix<T> flattening(const Tensor3<T>& t, int mode) {
    if (mode < 1 || mode > 3) throw InvalidParameter("mode must be 1, 2 or 3");
    const auto& d = t.dims();
    int rows = d[static_cast<size_t>(mode - 1)];
    long cols;
    Matrix<T> m;
    switch (mode) {
        case 1:
            cols = static_cast<long>(d[1]) * d[2];
            m = Matrix<T>(rows, static_cast<int>(cols));
            for (const auto& [idx, v] : t) m(idx[0], idx[1] * d[2] + idx[2]) += v;
            break;
        case 2:
            cols = static_cast<long>(d[0]) * d[2];
            m = Matrix<T>(rows, static_cast<int>(cols));
            for (const auto& [idx, v] : t) m(idx[1], idx[0] * d[2] + idx[2]) += v;
            break;
        default:
            cols = static_cast<long>(d[0]) * d[1];
            m = Matrix<T>(rows, static_cast<int>(cols));
            for (const auto& [idx, v] : t) m(idx[2], idx[0] * d[1] + idx[1]) += v;
    }
    return m;
}

template <typename T>
int flattening_rank(const Tensor3<T>& t, int mode) {
    return matrix_rank(flattening(t, mode));
}

template <typename T>
bool is_concise(const Tensor3<T>& t) {
    for (int mode = 1; mode <= 3; ++mode)
        if (flattening_rank(t, mode) != t.dims()[static_cast<size_t>(mode - 1)]) return false;
    return true;
}

inline constexpr std::uint64_t kDefaultMaxCells = 1'000'000;

// Kronecker (tensor) product with factor-wise row-major index pairing:
// (i, i') -> i * dims'(factor) + i'.
template <typename T>
Tensor3<T> kron(const Tensor3<T>& a, const Tensor3<T>& b, std::uint64_t max_cells = kDefaultMaxCells) {
    const auto& da = a.dims();
    const auto& db = b.dims();
    std::uint64_t cells = 1;
    for (size_t f = 0; f < 3; ++f) {
        cells *= static_cast<std::uint64_t>(da[f]) * static_cast<std::uint64_t>(db[f]);
        if (cells > max_cells) throw DimensionOverflow("kron result exceeds the cell budget");
    }
    Tensor3<T> out(da[0] * db[0], da[1] * db[1], da[2] * db[2]);
    for (const auto& [ia, va] : a)
        for (const auto& [ib, vb] : b)
            out.add(ia[0] * db[0] + ib[0], ia[1] * db[1] + ib[1], ia[2] * db[2] + ib[2], va * vb);
    return out;
}

// Left-associated Kronecker power: T, T x T, (T x T) x T, ...
template <typename T>
Tensor3<T> kron_power(const Tensor3<T>& t, int n, std::uint64_t max_cells = kDefaultMaxCells) {
    if (n < 1) throw InvalidParameter("power must be >= 1");
    Tensor3<T> out = t;
    for (int i = 1; i < n; ++i) out = kron(out, t, max_cells);
    return out;
}

// T' = (F1 (x) F2 (x) F3) T, i.e. T'(a,b,c) = sum F1(a,i) F2(b,j) F3(c,k) T(i,j,k).
template <typename T>
Tensor3<T> apply_restriction(const RestrictionOperator<T>& op, const Tensor3<T>& t) {
    const auto& d = t.dims();
    if (op.f1.cols() != d[0] || op.f2.cols() != d[1] || op.f3.cols() != d[2])
        throw DimensionMismatch("operator shape incompatible with tensor format");
    Tensor3<T> out(op.f1.rows(), op.f2.rows(), op.f3.rows());
    for (const auto& [idx, v] : t)
        for (int a = 0; a < op.f1.rows(); ++a) {
            const T& w1 = op.f1(a, idx[0]);
            if (is_zero(w1)) continue;
            for (int b = 0; b < op.f2.rows(); ++b) {
                const T& w2 = op.f2(b, idx[1]);
                if (is_zero(w2)) continue;
                T w12 = w1 * w2 * v;
                for (int c = 0; c < op.f3.rows(); ++c) {
                    const T& w3 = op.f3(c, idx[2]);
                    if (is_zero(w3)) continue;
                    out.add(a, b, c, w12 * w3);
                }
            }
        }
    return out;
}

// Factor-wise composition: applying the result equals applying inner then outer.
template <typename T>
RestrictionOperator<T> compose(const RestrictionOperator<T>& outer, const RestrictionOperator<T>& inner) {
    return {outer.f1 * inner.f1, outer.f2 * inner.f2, outer.f3 * inner.f3};
}

Tensor3<EpsScalar> promote(const Tensor3<Rational>& t);

// Entry-wise value at eps = 0 (zero entries dropped); throws NotRegularAtZero
// on any pole.
Tensor3<Rational> eval_at_zero(const Tensor3<EpsScalar>& t);

struct BindingWitnesses {
    Vec<Rational> alpha1, alpha2;
};

// Searches for covectors with full-rank contractions in factors 1 and 2:
// basis covectors first, then seeded random covectors with entries in
// {-3..3}. A nullopt result means no witness was found within the schedule,
// not that the tensor is unbinding.
std::optional<BindingWitnesses> find_binding_covectors(const Tensor3<Rational>& t, int max_attempts = 200,
                                                       std::uint64_t seed = 0);

} // namespace tdeg

#endif // TDEG_TENSOR3_HPP

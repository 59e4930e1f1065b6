#ifndef TDEG_MATRIX_HPP
#define TDEG_MATRIX_HPP

#include <optional>
#include <vector>

#include <tdeg/eps_scalar.hpp>

namespace tdeg {

template <typename T>
using Vec = std::vector<T>;

// Dense row-major matrix over an exact field (Rational or EpsScalar).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const T& v = (*this)(r, k);
                if (is_zero(v)) continue;
                for (int c = 0; c < o.cols_; ++c) out(r, c) += v * o(k, c);
            }
        return out;
    }

    Vec<T> apply(const Vec<T>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        Vec<T> out(static_cast<size_t>(rows_));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (!is_zero((*this)(r, c))) out[r] += (*this)(r, c) * x[c];
        return out;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// Row-echelon rank over any exact field; deterministic (first nonzero pivot).
template <typename T>
int rank_gauss(Matrix<T> m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!is_zero(m(r, c))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (is_zero(m(r, c))) continue;
            T f = m(r, c) / m(rank, c);
            for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Fraction-free Bareiss elimination on an integer matrix; all intermediate
// divisions are exact minors, which keeps entry growth polynomial.
int rank_bareiss(std::vector<std::vector<Integer>> m);

// Over the rationals clear denominators row-wise and run Bareiss.
int matrix_rank(const Matrix<Rational>& m);
// Over eps use plain elimination; EpsScalar arithmetic gcd-normalizes each step.
inline int matrix_rank(const Matrix<EpsScalar>& m) { return rank_gauss(m); }

template <typename T>
bool is_invertible(const Matrix<T>& m) {
    return m.rows() == m.cols() && matrix_rank(m) == m.rows();
}

// Gauss-Jordan inverse; nullopt when singular.
template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(a(r, c))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        T d = a(c, c);
        for (int j = 0; j < n; ++j) {
            a(c, j) = a(c, j) / d;
            inv(c, j) = inv(c, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c))) continue;
            T f = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// Particular solution of A x = b (free variables set to zero); nullopt when
// the system is inconsistent.
template <typename T>
std::optional<Vec<T>> solve_linear(Matrix<T> a, Vec<T> b) {
    if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("rhs length mismatch");
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(a(r, c))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = c; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
            std::swap(b[pivot], b[rank]);
        }
        T d = a(rank, c);
        for (int j = c; j < cols; ++j) a(rank, j) = a(rank, j) / d;
        b[rank] = b[rank] / d;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || is_zero(a(r, c))) continue;
            T f = a(r, c);
            for (int j = c; j < cols; ++j) a(r, j) -= f * a(rank, j);
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!is_zero(b[r])) return std::nullopt;
    Vec<T> x(static_cast<size_t>(cols));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

// A triple of linear maps acting factor-wise on an order-3 tensor.
template <typename T>
struct RestrictionOperator {
    Matrix<T> f1, f2, f3;
};

inline EpsScalar promote(const Rational& x) { return EpsScalar(x); }

Matrix<EpsScalar> promote(const Matrix<Rational>& m);
Vec<EpsScalar> promote(const Vec<Rational>& v);
RestrictionOperator<EpsScalar> promote(const RestrictionOperator<Rational>& op);

// Entry-wise value at eps = 0; throws NotRegularAtZero on any pole.
Matrix<Rational> eval_at_zero(const Matrix<EpsScalar>& m);

// Checks m = id + O(eps): every entry regular at 0 and the value there is
// the identity matrix.
bool is_identity_plus_eps(const Matrix<EpsScalar>& m);

} // namespace tdeg

#endif // TDEG_MATRIX_HPP

#include <tdeg/matrix.hpp>

namespace tdeg {

int rank_bareiss(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    Integer prev(1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(m[r][c]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) m[pivot].swap(m[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) {
                Integer t = m[rank][c] * m[r][j] - m[r][c] * m[rank][j];
                Integer q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (sgn(rem) != 0) throw Error("internal: Bareiss division not exact");
                m[r][j] = q;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

int matrix_rank(const Matrix<Rational>& m) {
    std::vector<std::vector<Integer>> im(static_cast<size_t>(m.rows()),
                                         std::vector<Integer>(static_cast<size_t>(m.cols())));
    for (int r = 0; r < m.rows(); ++r) {
        Integer lcm(1);
        for (int c = 0; c < m.cols(); ++c) lcm = ::lcm(lcm, m(r, c).get_den());
        for (int c = 0; c < m.cols(); ++c) im[r][c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
    return rank_bareiss(std::move(im));
}

Matrix<EpsScalar> promote(const Matrix<Rational>& m) {
    Matrix<EpsScalar> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = EpsScalar(m(r, c));
    return out;
}

Vec<EpsScalar> promote(const Vec<Rational>& v) {
    Vec<EpsScalar> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = EpsScalar(v[i]);
    return out;
}

RestrictionOperator<EpsScalar> promote(const RestrictionOperator<Rational>& op) {
    return {promote(op.f1), promote(op.f2), promote(op.f3)};
}

Matrix<Rational> eval_at_zero(const Matrix<EpsScalar>& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval_at_zero();
    return out;
}

bool is_identity_plus_eps(const Matrix<EpsScalar>& m) {
    if (m.rows() != m.cols()) return false;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const EpsScalar& v = m(r, c);
            if (!v.regular_at_zero()) return false;
            if (v.eval_at_zero() != (r == c ? 1 : 0)) return false;
        }
    return true;
}

} // namespace tdeg

#ifndef TDEG_EPS_SCALAR_HPP
#define TDEG_EPS_SCALAR_HPP

#include <optional>
#include <string>

#include <tdeg/poly.hpp>

namespace tdeg {

// An exact rational function in the infinitesimal eps: a ratio num/den of
// rational-coefficient polynomials, kept in a unique canonical form:
//
//   - den != 0 and gcd(num, den) = 1,
//   - the lowest nonzero coefficient of den is 1 (constant term 1 whenever
//     den(0) != 0),
//   - zero is 0/1.
//
// Canonical form makes equality a plain coefficient comparison. Negative
// powers of eps live in the denominator (1/eps^3), never as negative
// exponents.
class EpsScalar {
public:
    EpsScalar() : num_(), den_(EpsPoly::one()) {}
    EpsScalar(const Rational& c) : num_(c), den_(EpsPoly::one()) {}
    EpsScalar(long c) : EpsScalar(Rational(c)) {}
    explicit EpsScalar(EpsPoly num) : num_(std::move(num)), den_(EpsPoly::one()) {}
    EpsScalar(EpsPoly num, EpsPoly den);

    static EpsScalar eps() { return EpsScalar(EpsPoly::monomial(1, Rational(1))); }
    // eps^k for any integer k; k < 0 produces a pole at 0.
    static EpsScalar eps_power(long k);

    const EpsPoly& num() const { return num_; }
    const EpsPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the value lies in the base field (no eps dependence).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const;

    // Order of vanishing at eps = 0 (negative for a pole); nullopt means
    // +infinity, i.e. the value is zero.
    std::optional<long> valuation() const;
    bool regular_at_zero() const;

    // Value at eps = 0; throws NotRegularAtZero on a pole.
    Rational eval_at_zero() const;
    // Value at eps = t; throws DivisionByZero when t is a root of den.
    Rational eval_at(const Rational& t) const;

    EpsScalar operator-() const;
    friend EpsScalar operator+(const EpsScalar& a, const EpsScalar& b);
    friend EpsScalar operator-(const EpsScalar& a, const EpsScalar& b);
    friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);
    // Throws DivisionByZero when b = 0.
    friend EpsScalar operator/(const EpsScalar& a, const EpsScalar& b);
    EpsScalar& operator+=(const EpsScalar& o) { return *this = *this + o; }
    EpsScalar& operator-=(const EpsScalar& o) { return *this = *this - o; }
    EpsScalar& operator*=(const EpsScalar& o) { return *this = *this * o; }
    EpsScalar& operator/=(const EpsScalar& o) { return *this = *this / o; }

    // Canonical forms are unique, so this decides mathematical equality.
    bool operator==(const EpsScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const EpsScalar& o) const { return !(*this == o); }

private:
    void canonicalize();

    EpsPoly num_, den_;
};

inline bool is_zero(const EpsScalar& x) { return x.is_zero(); }

} // namespace tdeg

#endif // TDEG_EPS_SCALAR_HPP

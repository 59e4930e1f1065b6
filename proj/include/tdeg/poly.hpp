#ifndef TDEG_POLY_HPP
#define TDEG_POLY_HPP

#include <utility>
#include <vector>

#include <tdeg/rational.hpp>

namespace tdeg {

// Dense univariate polynomial in the infinitesimal, with rational
// coefficients. Coefficient k is the coefficient of eps^k. The coefficient
// vector never has trailing zeros; the zero polynomial is the empty vector.
class EpsPoly {
public:
    EpsPoly() = default;
    explicit EpsPoly(const Rational& c);
    explicit EpsPoly(std::vector<Rational> coeffs);

    static EpsPoly monomial(long exponent, const Rational& coeff);
    static EpsPoly one() { return EpsPoly(Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    // Lowest exponent with a nonzero coefficient; only defined for nonzero polynomials.
    long low_degree() const;

    const Rational& coeff(long k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& t) const;
    Rational eval_at_zero() const { return coeff(0); }

    bool is_constant() const { return c_.size() <= 1; }

    EpsPoly operator-() const;
    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);

    friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
    friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
    bool operator==(const EpsPoly& o) const { return c_ == o.c_; }

    EpsPoly scaled(const Rational& s) const;

    // Quotient and remainder over the rational coefficient field.
    // Throws DivisionByZero when the divisor is zero.
    static std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& num, const EpsPoly& den);
    // Exact division; throws InvalidParameter if the remainder is nonzero.
    static EpsPoly div_exact(const EpsPoly& num, const EpsPoly& den);

    // Monic gcd (leading coefficient 1); gcd(0, 0) = 0.
    static EpsPoly gcd(EpsPoly a, EpsPoly b);

private:
    void trim();

    std::vector<Rational> c_;
};

} // namespace tdeg

#endif // TDEG_POLY_HPP

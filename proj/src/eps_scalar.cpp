#include <tdeg/eps_scalar.hpp>

namespace tdeg {

EpsScalar::EpsScalar(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    canonicalize();
}

EpsScalar EpsScalar::eps_power(long k) {
    if (k >= 0) return EpsScalar(EpsPoly::monomial(k, Rational(1)));
    return EpsScalar(EpsPoly::one(), EpsPoly::monomial(-k, Rational(1)));
}

void EpsScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = EpsPoly::one();
        return;
    }
    EpsPoly g = EpsPoly::gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
        num_ = EpsPoly::div_exact(num_, g);
        den_ = EpsPoly::div_exact(den_, g);
    }
    const Rational& low = den_.coeff(den_.low_degree());
    if (!is_one(low)) {
        Rational inv = Rational(1) / low;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational EpsScalar::as_rational() const {
    if (!is_constant()) throw InvalidParameter("scalar depends on eps");
    return num_.coeff(0) / den_.coeff(0);
}

std::optional<long> EpsScalar::valuation() const {
    if (num_.is_zero()) return std::nullopt;
    return num_.low_degree() - den_.low_degree();
}

bool EpsScalar::regular_at_zero() const {
    auto v = valuation();
    return !v.has_value() || *v >= 0;
}

Rational EpsScalar::eval_at_zero() const {
    auto v = valuation();
    if (!v.has_value()) return Rational(0);
    if (*v < 0) throw NotRegularAtZero("pole at eps = 0");
    if (*v > 0) return Rational(0);
    // canonical form: the shared eps power is cancelled, so num and den both
    // have nonzero constant term and den(0) = 1
    return num_.coeff(num_.low_degree()) / den_.coeff(den_.low_degree());
}

Rational EpsScalar::eval_at(const Rational& t) const {
    Rational d = den_.eval(t);
    if (tdeg::is_zero(d)) throw DivisionByZero("denominator vanishes at the evaluation point");
    return num_.eval(t) / d;
}

EpsScalar EpsScalar::operator-() const {
    EpsScalar r(*this);
    r.num_ = -r.num_;
    return r;
}

EpsScalar operator+(const EpsScalar& a, const EpsScalar& b) {
    return EpsScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) {
    return EpsScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
    return EpsScalar(a.num_ * b.num_, a.den_ * b.den_);
}

EpsScalar operator/(const EpsScalar& a, const EpsScalar& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero scalar");
    return EpsScalar(a.num_ * b.den_, a.den_ * b.num_);
}

} // namespace tdeg

#include <tdeg/poly.hpp>

#include <algorithm>

namespace tdeg {

EpsPoly::EpsPoly(const Rational& c) {
    if (!tdeg::is_zero(c)) c_.push_back(c);
}

EpsPoly::EpsPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

EpsPoly EpsPoly::monomial(long exponent, const Rational& coeff) {
    EpsPoly p;
    if (tdeg::is_zero(coeff)) return p;
    if (exponent < 0) throw InvalidParameter("monomial exponent must be nonnegative");
    p.c_.assign(static_cast<size_t>(exponent) + 1, Rational(0));
    p.c_.back() = coeff;
    return p;
}

void EpsPoly::trim() {
    while (!c_.empty() && tdeg::is_zero(c_.back())) c_.pop_back();
}

long EpsPoly::low_degree() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!tdeg::is_zero(c_[k])) return static_cast<long>(k);
    throw InvalidParameter("low_degree of the zero polynomial");
}

const Rational& EpsPoly::coeff(long k) const {
    static const Rational zero(0);
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return zero;
    return c_[static_cast<size_t>(k)];
}

Rational EpsPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    if (a.is_zero() || b.is_zero()) return EpsPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (tdeg::is_zero(a.c_[i])) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return EpsPoly(std::move(out));
}

EpsPoly EpsPoly::scaled(const Rational& s) const {
    if (tdeg::is_zero(s)) return EpsPoly();
    EpsPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<EpsPoly, EpsPoly> EpsPoly::divmod(const EpsPoly& num, const EpsPoly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (num.degree() < den.degree()) return {EpsPoly(), num};
    std::vector<Rational> rem = num.c_;
    std::vector<Rational> quo(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const Rational& lead = den.c_.back();
    for (long k = num.degree(); k >= den.degree(); --k) {
        Rational q = rem[static_cast<size_t>(k)] / lead;
        if (tdeg::is_zero(q)) continue;
        quo[static_cast<size_t>(k - den.degree())] = q;
        for (long j = 0; j <= den.degree(); ++j)
            rem[static_cast<size_t>(k - den.degree() + j)] -= q * den.c_[static_cast<size_t>(j)];
    }
    return {EpsPoly(std::move(quo)), EpsPoly(std::move(rem))};
}

EpsPoly EpsPoly::div_exact(const EpsPoly& num, const EpsPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw InvalidParameter("polynomial division is not exact");
    return q;
}

EpsPoly EpsPoly::gcd(EpsPoly a, EpsPoly b) {
    while (!b.is_zero()) {
        EpsPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // normalize monic
    return a.scaled(Rational(1) / a.c_.back());
}

} // namespace tdeg

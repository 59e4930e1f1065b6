#ifndef TDEG_RATIONAL_HPP
#define TDEG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include <tdeg/errors.hpp>

namespace tdeg {

// Arbitrary-precision integers and rationals, backed by GMP. mpq_class keeps
// values canonical (coprime, positive denominator) through arithmetic, which
// is exactly the invariant the rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

inline std::string to_string(const Integer& x) { return x.get_str(); }

// "5", "-5", "3/4".
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Strict parse of an integer or a ratio of integers. Throws ParseError on
// malformed input and DivisionByZero on a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace tdeg

#endif // TDEG_RATIONAL_HPP

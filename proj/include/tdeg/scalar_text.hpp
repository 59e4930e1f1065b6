#ifndef TDEG_SCALAR_TEXT_HPP
#define TDEG_SCALAR_TEXT_HPP

#include <string>
#include <string_view>

#include <tdeg/eps_scalar.hpp>

namespace tdeg {

// The scalar grammar used inside tensor, operator and certificate files:
// integer literals, 'e' for the infinitesimal, '+', '-', '*', '/', '^' and
// parentheses, whitespace insensitive. Examples:
//
//   "1 - 2*e + e^3"        polynomial
//   "(1 - 2*e)/e^3"        pole of order 3 at e = 0
//   "3/4"                  rational constant
//
// Exponents after '^' are integers; negative exponents are accepted and read
// as division ("e^-3" = "1/e^3"). format_scalar always emits the canonical
// "(num)/(den)" form with ascending powers, so parse(format(x)) == x.
EpsScalar parse_scalar(std::string_view text);

std::string format_scalar(const EpsScalar& s);
std::string format_poly(const EpsPoly& p);

} // namespace tdeg

#endif // TDEG_SCALAR_TEXT_HPP

#pragma once

#include "fpalg/poly.hpp"

#include <string>

namespace fpalg {

/// Canonical rendering of a word: generator names joined by '*', with runs of
/// a repeated generator compressed to caret powers ("E^2*F"). Empty word: "1".
std::string to_string(const Word& w, const Alphabet& alphabet);

/// Canonical rendering of a polynomial: terms in decreasing monomial order,
/// signs absorbed into separators, unit coefficients dropped, fractional and
/// mixed coefficients parenthesized ("(1/4)*i*E*H"). Zero: "0".
/// Feeding the output back to the expression parser reproduces the polynomial.
std::string to_string(const Poly& p, const Alphabet& alphabet);

} // namespace fpalg

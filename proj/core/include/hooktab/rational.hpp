#pragma once

// Exact rational coefficients. Young symmetrizer expansions multiply row and
// column factorials, which overflow fixed-width integers almost immediately,
// so everything numeric in this library is an arbitrary-precision rational.
// The alias lives here so the backend can be swapped in one place.

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace hooktab {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Renders "p" or "p/q" with an ASCII minus sign, never decimals.
inline std::string rational_to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += "/";
    s += denominator(x).str();
  }
  return s;
}

Rational rational_from_string(const std::string& text);

}  // namespace hooktab

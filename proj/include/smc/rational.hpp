#pragma once

#include <stdexcept>

#include <boost/multiprecision/gmp.hpp>

namespace smc {

// Exact arithmetic everywhere. mpq keeps fractions canonical
// (gcd-reduced, positive denominator), which the whole library relies on
// for structural equality of polynomials.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// mpq's two-argument constructor requires a positive denominator; this
// factory accepts either sign and rejects zero.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace smc

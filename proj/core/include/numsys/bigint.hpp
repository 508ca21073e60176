#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace numsys {

// All counts and values are exact. Integer is arbitrary precision, Rational
// is a quotient of Integers in lowest terms.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Canonical representative in 0..m-1.
inline Integer mod_canonical(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool fits_int64(const Integer& a) {
  return a >= Integer(INT64_MIN) && a <= Integer(INT64_MAX);
}

inline std::int64_t to_int64(const Integer& a) {
  return static_cast<std::int64_t>(mpz_get_si(a.get_mpz_t()));
}

// Decimal expansion of a rational with `digits` places, rounded toward zero.
// Used for report output; avoids floating point so reports are byte stable.
std::string decimal_string(const Rational& value, int digits);

std::string to_string(const Integer& value);

}  // namespace numsys

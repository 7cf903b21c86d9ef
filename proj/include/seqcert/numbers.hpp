#pragma once

#include <gmpxx.h>

#include <string>

#include "seqcert/errors.hpp"

namespace seqcert {

// All arithmetic in this library is exact. Integers are arbitrary-precision,
// rationals are kept reduced with positive denominator (GMP canonical form),
// so equality and ordering are plain value comparisons throughout.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws ValidationError when den == 0.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Parses a decimal integer string (optional leading '-'); rejects anything else.
inline Int int_from_decimal(const std::string& s) {
  if (s.empty()) throw ValidationError("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ValidationError("integer literal '" + s + "' has no digits");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw ValidationError("integer literal '" + s + "' is not decimal");
  return Int(s, 10);
}

}  // namespace seqcert

#pragma once

#include <optional>

#include "seqcert/polynomial.hpp"

namespace seqcert {

enum class Positivity { kPositiveAll, kViolation };

/// Outcome of a sign decision over the integers n > n0.
struct PositivityVerdict {
  Positivity status = Positivity::kViolation;
  std::optional<Int> witness;  // an n > n0 failing the sign requirement
  Int scan_bound = 0;          // explicit evaluation covered (n0, scan_bound]

  bool positive_all() const { return status == Positivity::kPositiveAll; }
};

/// Decides "p(n) > 0 for every integer n > n0", soundly and completely.
///
/// Method: all real roots of p lie within the Cauchy bound
/// B = 1 + max|c_i| / |c_lead|, so beyond B the sign of p is the sign of its
/// leading coefficient. Evaluating p at every integer in (n0, B] therefore
/// decides the claim exactly; with a non-positive leading coefficient a
/// violation always exists and is found at or before B+1.
///
/// Throws ValidationError for the zero polynomial.
PositivityVerdict positive_beyond(const Polynomial& p, const Int& n0);

/// Same decision procedure for "p(n) >= 0 for every integer n > n0".
/// The zero polynomial trivially satisfies this. Roots inside the scanned
/// range are allowed; roots beyond the scan bound cannot exist.
PositivityVerdict nonnegative_beyond(const Polynomial& p, const Int& n0);

}  // namespace seqcert

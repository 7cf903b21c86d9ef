#include "seqcert/positivity.hpp"

namespace seqcert {

namespace {

// Smallest integer B with B >= 1 + max|c_i|/|c_lead| over i < degree.
Int cauchy_root_bound(const Polynomial& p) {
  const Int lead = abs(p.leading());
  Int mx = 0;
  const auto& cs = p.coeffs();
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    Int m = abs(cs[i]);
    if (m > mx) mx = m;
  }
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lead.get_mpz_t());
  return 1 + q;
}

PositivityVerdict decide(const Polynomial& p, const Int& n0, bool strict) {
  if (p.is_zero()) {
    if (strict) throw ValidationError("positivity of the zero polynomial is undecidable as stated");
    return {Positivity::kPositiveAll, std::nullopt, n0};
  }

  const bool lead_positive = p.leading() > 0;
  Int bound = cauchy_root_bound(p);
  if (bound < n0) bound = n0;
  // With a negative leading coefficient the sign beyond the root bound is
  // negative, so one extra point is guaranteed to witness the violation.
  Int scan_hi = lead_positive ? bound : bound + 1;

  for (Int n = n0 + 1; n <= scan_hi; ++n) {
    Int v = p(n);
    if (strict ? (v <= 0) : (v < 0))
      return {Positivity::kViolation, n, scan_hi};
  }
  if (lead_positive) return {Positivity::kPositiveAll, std::nullopt, scan_hi};
  // Unreachable: a polynomial with negative leading coefficient is negative
  // at bound + 1.
  throw std::logic_error("sign scan exhausted without finding the guaranteed violation");
}

}  // namespace

PositivityVerdict positive_beyond(const Polynomial& p, const Int& n0) {
  return decide(p, n0, /*strict=*/true);
}

PositivityVerdict nonnegative_beyond(const Polynomial& p, const Int& n0) {
  return decide(p, n0, /*strict=*/false);
}

}  // namespace seqcert

#pragma once

#include <optional>
#include <vector>

#include "seqcert/recurrence.hpp"

namespace seqcert {

/// b^2 - 4ac of the recurrence, in canonical form. Its sign at an index n
/// decides whether the characteristic quadratic a(n) x^2 + b(n) x + c(n) has
/// real roots there.
Polynomial discriminant(const ThreeTermRecurrence& rec);

enum class RootComparison { kDominates, kBelow, kNoRealRoot };

/// Compares r against the larger root (-b(n) + sqrt(D(n))) / (2 a(n)) without
/// radicals. Valid for a(n) > 0 and D(n) >= 0:
///   r >= larger root  <=>  a r^2 + b r + c >= 0  and  2 a r + b >= 0
/// (the quadratic is nonnegative outside the roots; the vertex condition
/// selects the right-hand side). Returns kNoRealRoot when D(n) < 0.
///
/// Throws NonPositiveLeading when a(n) <= 0, NonPositiveRatio when r <= 0.
RootComparison ratio_vs_larger_root(const ThreeTermRecurrence& rec, const Int& n, const Rat& r);

struct CriterionIndexRecord {
  long n = 0;
  bool condition_i = false;           // a(n) > 0
  bool discriminant_negative = false; // D(n) < 0: condition (ii) first branch
  bool ratio_dominates_root = false;  // r(n) >= larger root: second branch
  bool ok() const { return condition_i && (discriminant_negative || ratio_dominates_root); }
};

/// Outcome of the per-index sufficient condition over (n0, N].
struct CriterionOutcome {
  long n0 = 0, N = 0;
  std::vector<CriterionIndexRecord> records;
  bool satisfied = false;
  std::optional<long> first_failure;
};

/// Checks the sufficient condition at every n in (n0, N] with r = ratio(n),
/// evaluating a(n) and D(n) exactly per index. When SATISFIED, the guaranteed
/// conclusion S_n^2 >= S_{n+1} S_{n-1} is re-verified on (n0, N-1] and any
/// mismatch raises logic_error. Requires n0 >= 1 and table coverage of
/// [n0-1, N] (IndexOutOfRange otherwise).
CriterionOutcome verify_criterion_range(const ThreeTermRecurrence& rec, const TermTable& table,
                                        long n0, long N);

/// Smallest n0 in [1, N-1] whose range check over (n0, N] is SATISFIED, or
/// absent when none exists. Requires table coverage of [0, N].
std::optional<long> find_minimal_n0(const ThreeTermRecurrence& rec, const TermTable& table,
                                    long N);

}  // namespace seqcert

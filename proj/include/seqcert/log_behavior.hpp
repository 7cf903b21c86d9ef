#pragma once

#include <optional>
#include <string>

#include "seqcert/recurrence.hpp"

namespace seqcert {

enum class SequenceProperty { kLogConcave, kLogConvex, kLogBalanced, kNthRootDecreasing };
enum class BehaviorStatus { kHolds, kViolated };

const char* property_name(SequenceProperty p);

/// Exact witness of the first failing comparison: the defining inequality at
/// `index` compared `lhs` against `rhs` and failed.
struct ViolationWitness {
  long index = 0;
  Rat lhs, rhs;
  std::string detail;
};

struct BehaviorVerdict {
  SequenceProperty property;
  long lo = 0, hi = 0;
  BehaviorStatus status = BehaviorStatus::kViolated;
  std::optional<ViolationWitness> first_violation;
  /// Whether every comparison in the window held strictly (no equalities).
  bool all_strict = false;

  bool holds() const { return status == BehaviorStatus::kHolds; }
};

// Every check below compares in cross-multiplied exact form: no division, no
// radicals, no floating point on the verification path. Windows touch table
// indices [lo-1, hi+1]; touched terms must be positive.

/// S_k^2 >= S_{k+1} S_{k-1} for all k in [lo, hi].
BehaviorVerdict check_log_concave(const TermTable& table, long lo, long hi);

/// S_k^2 <= S_{k+1} S_{k-1} for all k in [lo, hi].
BehaviorVerdict check_log_convex(const TermTable& table, long lo, long hi);

/// Log-convex, and the factorial-scaled sequence {S_k / k!} is log-concave.
/// The scaled comparison is evaluated in the equivalent exact integer form
/// S_k^2 (k+1) >= S_{k+1} S_{k-1} k.
BehaviorVerdict check_log_balanced(const TermTable& table, long lo, long hi);

/// Strict decrease of the k-th roots of z_k := table[k + offset]: checked
/// radical-free as z_k^(k+1) > z_{k+1}^k for all k in [lo, hi].
/// Hypotheses (HypothesisViolated otherwise): touched z_k are positive
/// integers and z_0 > 1.
BehaviorVerdict check_nth_root_decreasing(const TermTable& table, long lo, long hi,
                                          long offset);

/// Term-wise product; ranges must agree (RangeMismatch otherwise).
TermTable hadamard_product(const TermTable& lhs, const TermTable& rhs);

}  // namespace seqcert

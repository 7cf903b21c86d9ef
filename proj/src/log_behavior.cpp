#include "seqcert/log_behavior.hpp"

namespace seqcert {

const char* property_name(SequenceProperty p) {
  switch (p) {
    case SequenceProperty::kLogConcave: return "log-concave";
    case SequenceProperty::kLogConvex: return "log-convex";
    case SequenceProperty::kLogBalanced: return "log-balanced";
    case SequenceProperty::kNthRootDecreasing: return "nth-root-decreasing";
  }
  return "?";
}

namespace {

void require_window(const TermTable& table, long lo, long hi, long margin_lo, long margin_hi) {
  if (lo > hi) throw IndexOutOfRange("empty or inverted window [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
  if (!table.covers(lo - margin_lo, hi + margin_hi))
    throw IndexOutOfRange("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] needs table indices [" + std::to_string(lo - margin_lo) + ", " +
                          std::to_string(hi + margin_hi) + "] of '" + table.name() + "' (covers 0.." +
                          std::to_string(table.max_index()) + ")");
}

void require_positive(const TermTable& table, long lo, long hi) {
  for (long k = lo; k <= hi; ++k)
    if (table.at(k) <= 0)
      throw ValidationError("term S_" + std::to_string(k) + " of '" + table.name() +
                            "' is not positive");
}

// Shared scan for the two mirror-image inequalities. concave=true checks
// S_k^2 >= S_{k+1} S_{k-1}; convex flips the comparison.
BehaviorVerdict scan_second_order(const TermTable& table, long lo, long hi, bool concave) {
  require_window(table, lo, hi, 1, 1);
  require_positive(table, lo - 1, hi + 1);
  BehaviorVerdict v;
  v.property = concave ? SequenceProperty::kLogConcave : SequenceProperty::kLogConvex;
  v.lo = lo;
  v.hi = hi;
  v.status = BehaviorStatus::kHolds;
  v.all_strict = true;
  for (long k = lo; k <= hi; ++k) {
    Rat lhs = table.at(k) * table.at(k);
    Rat rhs = table.at(k + 1) * table.at(k - 1);
    int order = cmp(lhs, rhs);
    if (concave ? (order < 0) : (order > 0)) {
      v.status = BehaviorStatus::kViolated;
      v.first_violation = ViolationWitness{k, lhs, rhs,
                                           concave ? "S_k^2 < S_{k+1} S_{k-1}"
                                                   : "S_k^2 > S_{k+1} S_{k-1}"};
      v.all_strict = false;
      return v;
    }
    if (order == 0) v.all_strict = false;
  }
  return v;
}

}  // namespace

BehaviorVerdict check_log_concave(const TermTable& table, long lo, long hi) {
  return scan_second_order(table, lo, hi, /*concave=*/true);
}

BehaviorVerdict check_log_convex(const TermTable& table, long lo, long hi) {
  return scan_second_order(table, lo, hi, /*concave=*/false);
}

BehaviorVerdict check_log_balanced(const TermTable& table, long lo, long hi) {
  require_window(table, lo, hi, 1, 1);
  require_positive(table, lo - 1, hi + 1);
  BehaviorVerdict v;
  v.property = SequenceProperty::kLogBalanced;
  v.lo = lo;
  v.hi = hi;
  v.status = BehaviorStatus::kHolds;
  v.all_strict = true;
  for (long k = lo; k <= hi; ++k) {
    Rat sq = table.at(k) * table.at(k);
    Rat cross = table.at(k + 1) * table.at(k - 1);
    // log-convex part of the definition
    int cmp_convex = cmp(sq, cross);
    if (cmp_convex > 0) {
      v.status = BehaviorStatus::kViolated;
      v.first_violation =
          ViolationWitness{k, sq, cross, "log-convex part fails: S_k^2 > S_{k+1} S_{k-1}"};
      v.all_strict = false;
      return v;
    }
    // {S_k / k!} log-concave, cross-multiplied: S_k^2 (k+1) >= S_{k+1} S_{k-1} k
    Rat lhs = sq * Int(k + 1);
    Rat rhs = cross * Int(k);
    int cmp_scaled = cmp(lhs, rhs);
    if (cmp_scaled < 0) {
      v.status = BehaviorStatus::kViolated;
      v.first_violation = ViolationWitness{
          k, lhs, rhs, "factorial-scaled part fails: S_k^2 (k+1) < S_{k+1} S_{k-1} k"};
      v.all_strict = false;
      return v;
    }
    if (cmp_convex == 0 || cmp_scaled == 0) v.all_strict = false;
  }
  return v;
}

BehaviorVerdict check_nth_root_decreasing(const TermTable& table, long lo, long hi,
                                          long offset) {
  if (lo < 1 || lo > hi)
    throw IndexOutOfRange("nth-root window must satisfy 1 <= lo <= hi");
  if (offset < 0 || !table.covers(offset, offset + hi + 1))
    throw IndexOutOfRange("nth-root window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] with offset " + std::to_string(offset) + " exceeds table '" +
                          table.name() + "'");

  auto z = [&](long k) {
    Rat v = table.at(k + offset);
    if (v <= 0 || !is_integral(v))
      throw HypothesisViolated("z_" + std::to_string(k) + " = S_" + std::to_string(k + offset) +
                               " is not a positive integer");
    return v.get_num();
  };
  if (z(0) <= 1) throw HypothesisViolated("z_0 = " + z(0).get_str() + " must exceed 1");

  BehaviorVerdict v;
  v.property = SequenceProperty::kNthRootDecreasing;
  v.lo = lo;
  v.hi = hi;
  v.status = BehaviorStatus::kHolds;
  v.all_strict = true;
  for (long k = lo; k <= hi; ++k) {
    Int lhs = pow_ui(z(k), static_cast<unsigned long>(k) + 1);
    Int rhs = pow_ui(z(k + 1), static_cast<unsigned long>(k));
    if (lhs <= rhs) {
      v.status = BehaviorStatus::kViolated;
      v.first_violation = ViolationWitness{k, Rat(lhs), Rat(rhs), "z_k^(k+1) <= z_{k+1}^k"};
      v.all_strict = false;
      return v;
    }
  }
  return v;
}

TermTable hadamard_product(const TermTable& lhs, const TermTable& rhs) {
  if (lhs.max_index() != rhs.max_index())
    throw RangeMismatch("hadamard product of tables with ranges 0.." +
                        std::to_string(lhs.max_index()) + " and 0.." +
                        std::to_string(rhs.max_index()));
  TermTable out;
  out.name_ = "hadamard(" + lhs.name() + ", " + rhs.name() + ")";
  out.mode_ = (lhs.mode() == ValueMode::kInteger && rhs.mode() == ValueMode::kInteger)
                  ? ValueMode::kInteger
                  : ValueMode::kRational;
  out.terms_.reserve(lhs.terms_.size());
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i)
    out.terms_.push_back(lhs.terms_[i] * rhs.terms_[i]);
  return out;
}

}  // namespace seqcert

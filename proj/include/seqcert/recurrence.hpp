#pragma once

#include <string>
#include <vector>

#include "seqcert/polynomial.hpp"

namespace seqcert {

enum class ValueMode { kInteger, kRational };

/// Homogeneous three-term recurrence a(n) S_{n+1} + b(n) S_n + c(n) S_{n-1} = 0
/// with polynomial coefficients and two positive initial terms S_0, S_1.
struct ThreeTermRecurrence {
  std::string name;
  Polynomial a, b, c;
  Int s0 = 1, s1 = 1;
  ValueMode mode = ValueMode::kInteger;
  std::string note;  // catalog metadata, never computed with
};

/// Structural checks: a not identically zero, initial terms strictly positive.
/// Throws ValidationError.
void validate_recurrence(const ThreeTermRecurrence& rec);

/// Exact terms S_0..S_N of one sequence. Tables generated from a recurrence
/// are strictly positive throughout; tables built from raw values may carry a
/// zero prefix (a sequence such as {n} starts at 0) but never an internal zero
/// or a negative term. Immutable once built.
class TermTable {
 public:
  static TermTable from_values(std::string name, std::vector<Rat> values, ValueMode mode);

  const std::string& name() const { return name_; }
  ValueMode mode() const { return mode_; }
  long max_index() const { return static_cast<long>(terms_.size()) - 1; }
  bool covers(long lo, long hi) const { return lo >= 0 && hi <= max_index() && lo <= hi; }

  const Rat& at(long n) const;
  /// The term as an integer; ValidationError when the value is not integral.
  Int integer_at(long n) const;

 private:
  TermTable() = default;
  std::string name_;
  std::vector<Rat> terms_;
  ValueMode mode_ = ValueMode::kInteger;
  friend TermTable generate_terms(const ThreeTermRecurrence&, long);
  friend TermTable hadamard_product(const TermTable&, const TermTable&);
};

/// Runs the recurrence forward: S_{n+1} = (-b(n) S_n - c(n) S_{n-1}) / a(n)
/// for n = 1..N-1, exactly. Generation itself keeps only the two live
/// predecessors; the table stores what the caller asked for. In kInteger mode
/// every division must be exact. Every generated term must be positive, and
/// the defining relation is re-checked against the stored values afterwards
/// rather than assumed.
///
/// Throws ZeroLeadingCoefficient(n), NonExactDivision(n), NonPositiveTerm(n),
/// ValidationError.
TermTable generate_terms(const ThreeTermRecurrence& rec, long N);

/// S_n / S_{n-1}, reduced. Throws IndexOutOfRange for n outside [1, N].
Rat ratio(const TermTable& table, long n);

/// The ratio recurrence r(n+1) = (-b(n) - c(n)/r(n)) / a(n), obtained by
/// dividing the defining relation by S_n.
/// Throws NonPositiveRatio when r_n <= 0, ZeroLeadingCoefficient when a(n) = 0.
Rat ratio_step(const ThreeTermRecurrence& rec, long n, const Rat& r_n);

}  // namespace seqcert

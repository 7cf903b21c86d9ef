#pragma once

#include <stdexcept>
#include <string>

namespace seqcert {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer-mode generation hit a recurrence step whose division is not exact.
class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(long n)
      : Error("non-exact division while computing term " + std::to_string(n + 1) +
              " (recurrence applied at n=" + std::to_string(n) + ")"),
        index(n) {}
  long index;
};

/// The leading coefficient polynomial a(n) vanished at an index used for generation.
class ZeroLeadingCoefficient : public Error {
 public:
  explicit ZeroLeadingCoefficient(long n)
      : Error("a(n) = 0 at n=" + std::to_string(n)), index(n) {}
  long index;
};

/// A generated term came out non-positive; downstream analysis assumes positive sequences.
class NonPositiveTerm : public Error {
 public:
  explicit NonPositiveTerm(long n)
      : Error("generated term S_" + std::to_string(n) + " is not positive"), index(n) {}
  long index;
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class NonPositiveRatio : public Error {
 public:
  explicit NonPositiveRatio(const std::string& what) : Error(what) {}
};

class NonPositiveLeading : public Error {
 public:
  explicit NonPositiveLeading(const std::string& what) : Error(what) {}
};

class MonotonicityPremiseFailed : public Error {
 public:
  explicit MonotonicityPremiseFailed(const std::string& what) : Error(what) {}
};

class RangeMismatch : public Error {
 public:
  explicit RangeMismatch(const std::string& what) : Error(what) {}
};

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

/// Input file is not syntactically valid JSON.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Input file parses but does not match the sequence-definition schema.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& field, const std::string& what)
      : Error("field '" + field + "': " + what), field(field) {}
  std::string field;
};

/// Structurally valid input with semantically invalid content.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace seqcert

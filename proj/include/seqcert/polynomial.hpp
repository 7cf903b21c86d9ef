#pragma once

#include <string>
#include <vector>

#include "seqcert/numbers.hpp"

namespace seqcert {

/// Univariate polynomial over the integers, coefficients in ascending degree
/// order. Canonical form: no trailing zero coefficients; the zero polynomial
/// is the empty coefficient list. Values are immutable after construction.
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  explicit Polynomial(std::vector<Int> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(Int c);
  static Polynomial from_decimal_strings(const std::vector<std::string>& coeffs);
  std::vector<std::string> to_decimal_strings() const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& coeff(std::size_t k) const;  // 0 beyond the degree

  /// Exact Horner evaluation.
  Int operator()(const Int& x) const;
  Rat operator()(const Rat& x) const;
  Int operator()(long x) const { return (*this)(Int(x)); }

  /// p(n+k) expanded back into canonical coefficients.
  Polynomial shifted(long k) const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Int& s, const Polynomial& p);
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;

  /// Display form such as "128n^3+128n^2-128n-128"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
  static const Int kZero;
};

}  // namespace seqcert

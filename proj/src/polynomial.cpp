#include "seqcert/polynomial.hpp"

#include <sstream>
#include <utility>

namespace seqcert {

const Int Polynomial::kZero = 0;

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

Polynomial Polynomial::from_decimal_strings(const std::vector<std::string>& coeffs) {
  std::vector<Int> cs;
  cs.reserve(coeffs.size());
  for (const auto& s : coeffs) cs.push_back(int_from_decimal(s));
  return Polynomial(std::move(cs));
}

std::vector<std::string> Polynomial::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& Polynomial::leading() const {
  if (is_zero()) throw ValidationError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

const Int& Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

Int Polynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat Polynomial::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(long k) const {
  // Horner in the shifted variable: fold coefficients against (n + k).
  const Polynomial step({k, 1});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * step + constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Int> cs(std::max(p.coeffs_.size(), q.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) cs[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) cs[i] += q.coeffs_[i];
  return Polynomial(std::move(cs));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Int> cs(std::max(p.coeffs_.size(), q.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) cs[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) cs[i] -= q.coeffs_[i];
  return Polynomial(std::move(cs));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Int> cs(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) cs[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return Polynomial(std::move(cs));
}

Polynomial operator*(const Int& s, const Polynomial& p) {
  std::vector<Int> cs = p.coeffs_;
  for (auto& c : cs) c *= s;
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator-() const { return Int(-1) * (*this); }

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Int& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    Int mag = abs(c);
    if (first && c < 0) os << "-";
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace seqcert

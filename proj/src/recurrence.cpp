#include "seqcert/recurrence.hpp"

#include <utility>

namespace seqcert {

void validate_recurrence(const ThreeTermRecurrence& rec) {
  if (rec.a.is_zero())
    throw ValidationError("recurrence '" + rec.name + "': a(n) is identically zero");
  if (rec.s0 <= 0 || rec.s1 <= 0)
    throw ValidationError("recurrence '" + rec.name + "': initial terms must be positive");
}

TermTable TermTable::from_values(std::string name, std::vector<Rat> values, ValueMode mode) {
  if (values.empty()) throw ValidationError("term table '" + name + "' is empty");
  bool seen_positive = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0)
      throw ValidationError("term table '" + name + "': negative term at index " +
                            std::to_string(i));
    if (values[i] == 0) {
      if (seen_positive)
        throw ValidationError("term table '" + name + "': internal zero at index " +
                              std::to_string(i));
    } else {
      seen_positive = true;
    }
  }
  TermTable t;
  t.name_ = std::move(name);
  t.terms_ = std::move(values);
  t.mode_ = mode;
  return t;
}

TermTable generate_terms(const ThreeTermRecurrence& rec, long N) {
  validate_recurrence(rec);
  if (N < 1) throw ValidationError("generate_terms requires N >= 1");

  TermTable table;
  table.name_ = rec.name;
  table.mode_ = rec.mode;
  table.terms_.reserve(static_cast<std::size_t>(N) + 1);
  table.terms_.emplace_back(rec.s0);
  table.terms_.emplace_back(rec.s1);

  if (rec.mode == ValueMode::kInteger) {
    Int prev = rec.s0, cur = rec.s1;
    for (long n = 1; n < N; ++n) {
      Int an = rec.a(n);
      if (an == 0) throw ZeroLeadingCoefficient(n);
      Int num = -(rec.b(n) * cur + rec.c(n) * prev);
      if (!mpz_divisible_p(num.get_mpz_t(), an.get_mpz_t())) throw NonExactDivision(n);
      Int next;
      mpz_divexact(next.get_mpz_t(), num.get_mpz_t(), an.get_mpz_t());
      if (next <= 0) throw NonPositiveTerm(n + 1);
      table.terms_.emplace_back(next);
      prev = std::move(cur);
      cur = std::move(next);
    }
  } else {
    Rat prev(rec.s0), cur(rec.s1);
    for (long n = 1; n < N; ++n) {
      Int an = rec.a(n);
      if (an == 0) throw ZeroLeadingCoefficient(n);
      Rat next = -(Rat(rec.b(n)) * cur + Rat(rec.c(n)) * prev) / Rat(an);
      if (next <= 0) throw NonPositiveTerm(n + 1);
      table.terms_.push_back(next);
      prev = std::move(cur);
      cur = std::move(next);
    }
  }

  // Defining relation, re-checked from the stored values.
  for (long n = 1; n < N; ++n) {
    Rat lhs = Rat(rec.a(n)) * table.terms_[static_cast<std::size_t>(n) + 1] +
              Rat(rec.b(n)) * table.terms_[static_cast<std::size_t>(n)] +
              Rat(rec.c(n)) * table.terms_[static_cast<std::size_t>(n) - 1];
    if (lhs != 0)
      throw std::logic_error("defining relation violated at n=" + std::to_string(n));
  }
  return table;
}

const Rat& TermTable::at(long n) const {
  if (n < 0 || n > max_index())
    throw IndexOutOfRange("table '" + name_ + "' has no index " + std::to_string(n) +
                          " (covers 0.." + std::to_string(max_index()) + ")");
  return terms_[static_cast<std::size_t>(n)];
}

Int TermTable::integer_at(long n) const {
  const Rat& v = at(n);
  if (!is_integral(v))
    throw ValidationError("term S_" + std::to_string(n) + " of '" + name_ +
                          "' is not an integer");
  return v.get_num();
}

Rat ratio(const TermTable& table, long n) {
  if (n < 1 || n > table.max_index())
    throw IndexOutOfRange("ratio index " + std::to_string(n) + " outside [1, " +
                          std::to_string(table.max_index()) + "]");
  const Rat& den = table.at(n - 1);
  if (den <= 0) throw ValidationError("ratio at n=" + std::to_string(n) +
                                      " needs a positive predecessor term");
  return table.at(n) / den;
}

Rat ratio_step(const ThreeTermRecurrence& rec, long n, const Rat& r_n) {
  if (r_n <= 0) throw NonPositiveRatio("ratio_step at n=" + std::to_string(n) +
                                       " requires a positive ratio");
  Int an = rec.a(n);
  if (an == 0) throw ZeroLeadingCoefficient(n);
  return (-Rat(rec.b(n)) - Rat(rec.c(n)) / r_n) / Rat(an);
}

}  // namespace seqcert

#include "majorder/recur.hpp"

#include <algorithm>

#include "majorder/errors.hpp"

namespace majorder {

BigNat fib(std::uint64_t n) {
  BigNat out;
  mpz_fib_ui(out.get_mpz_t(), n + 1);
  return out;
}

FibSeq::FibSeq(std::uint64_t n_max) {
  terms_.reserve(n_max + 1);
  terms_.emplace_back(1);
  if (n_max >= 1) terms_.emplace_back(1);
  for (std::uint64_t n = 2; n <= n_max; ++n) terms_.push_back(terms_[n - 1] + terms_[n - 2]);
}

BigNat RecurrenceSpec::q_at_a1() const {
  const BigNat x = static_cast<unsigned long>(a1);
  return x * x - BigNat(static_cast<long>(a)) * x - BigNat(static_cast<long>(b));
}

std::string RecurrenceSpec::to_string() const {
  return "a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",A1=" + std::to_string(a1);
}

std::vector<BigNat> recurrence_terms(const RecurrenceSpec& spec, std::uint64_t n_max) {
  if (spec.a <= 0) throw HypothesisViolated("recurrence needs a > 0 (" + spec.to_string() + ")");
  if (spec.b >= 0) throw HypothesisViolated("recurrence needs b < 0 (" + spec.to_string() + ")");
  if (spec.q_at_a1() <= 0) {
    throw HypothesisViolated("recurrence needs A1^2 - a A1 - b > 0 (" + spec.to_string() + ")");
  }
  std::vector<BigNat> out;
  out.reserve(n_max + 1);
  out.emplace_back(1);
  if (n_max >= 1) out.emplace_back(static_cast<unsigned long>(spec.a1));
  const BigNat a = static_cast<long>(spec.a);
  const BigNat b = static_cast<long>(spec.b);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    BigNat next = a * out[n - 1] + b * out[n - 2];
    if (next < 0) throw NegativeTerm(n);
    out.push_back(std::move(next));
  }
  return out;
}

const char* to_string(RatioDirection d) {
  return d == RatioDirection::Increasing ? "Increasing" : "Decreasing";
}

RatioDirection ratio_monotone_check(std::span<const BigNat> terms,
                                    std::optional<RatioDirection> expected) {
  if (terms.size() < 3) throw PreconditionUnmet("ratio check needs at least 3 terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] <= 0) throw PreconditionUnmet("ratio check needs positive terms (n = " + std::to_string(i) + ")");
  }
  std::optional<RatioDirection> seen = expected;
  for (std::size_t n = 1; n + 1 < terms.size(); ++n) {
    const int c = cmp(terms[n + 1] * terms[n - 1], terms[n] * terms[n]);
    if (c == 0) throw NotMonotone(n);
    const RatioDirection here = c > 0 ? RatioDirection::Increasing : RatioDirection::Decreasing;
    if (seen && *seen != here) throw NotMonotone(n);
    seen = here;
  }
  return *seen;
}

TermSource fib_even_source(std::uint64_t max_index) {
  const FibSeq f(2 * max_index);
  TermSource s{"fib-even", {}};
  for (std::uint64_t n = 0; n <= max_index; ++n) s.terms.push_back(f[2 * n]);
  return s;
}

TermSource fib_odd_source(std::uint64_t max_index) {
  const FibSeq f(2 * max_index + 1);
  TermSource s{"fib-odd", {}};
  for (std::uint64_t n = 0; n <= max_index; ++n) s.terms.push_back(f[2 * n + 1]);
  return s;
}

TermSource recurrence_source(const RecurrenceSpec& spec, std::uint64_t max_index) {
  return {"recurrence(" + spec.to_string() + ")", recurrence_terms(spec, max_index)};
}

std::vector<CanonicalSeq> index_tuples(std::uint64_t max_index, std::uint64_t max_tuple_len) {
  std::vector<CanonicalSeq> out;
  const std::uint64_t longest = std::min(max_index, max_tuple_len);
  for (std::uint64_t len = 1; len <= longest; ++len) {
    // Strictly decreasing tuples, lexicographically descending.
    std::vector<std::int64_t> t(len);
    for (std::uint64_t i = 0; i < len; ++i) t[i] = static_cast<std::int64_t>(max_index - i);
    while (true) {
      out.push_back(CanonicalSeq::canonicalize(t));
      // Decrement the rightmost position that still leaves room below it.
      std::size_t i = len;
      while (i > 0 && t[i - 1] <= static_cast<std::int64_t>(len - i + 1)) --i;
      if (i == 0) break;
      --t[i - 1];
      for (std::size_t j = i; j < len; ++j) t[j] = t[j - 1] - 1;
    }
  }
  return out;
}

UniquenessReport uniqueness_check(const TermSource& source, std::uint64_t max_index,
                                  std::uint64_t max_tuple_len) {
  if (max_index < 1 || max_tuple_len < 1) throw PreconditionUnmet("max_index and max_tuple_len must be >= 1");
  if (source.terms.size() <= max_index) throw PreconditionUnmet("term source shorter than max_index");

  UniquenessReport report;
  report.source = source.name;
  report.max_index = max_index;
  report.max_tuple_len = max_tuple_len;

  const auto tuples = index_tuples(max_index, max_tuple_len);
  std::vector<BigNat> products;
  products.reserve(tuples.size());
  for (const auto& t : tuples) {
    BigNat p = 1;
    for (Part i : t.parts()) p *= source.terms[i];
    products.push_back(std::move(p));
  }
  report.tuples = tuples.size();

  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      if (i == j || !majorizes(tuples[i], tuples[j])) continue;
      ++report.pairs_checked;
      if (products[i] == products[j]) report.violations.emplace_back(tuples[i], tuples[j]);
    }
  }
  return report;
}

RealInterval binet_interval(std::uint64_t n, mpfr_prec_t precision) {
  const RealInterval root5 = sqrt(RealInterval::exact(5L, precision));
  const RealInterval half = RealInterval::exact(BigRat(1, 2), precision);
  const RealInterval one = RealInterval::exact(1L, precision);
  const RealInterval alpha = (one + root5) * half;
  const RealInterval beta = (one - root5) * half;
  return (pow(alpha, n + 1) - pow(beta, n + 1)) / root5;
}

bool binet_enclosure_check(std::uint64_t n_max, mpfr_prec_t precision) {
  const FibSeq f(n_max);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (!binet_interval(n, precision).contains(f[n])) return false;
  }
  return true;
}

}  // namespace majorder

#pragma once

// Fibonacci numbers (F0 = F1 = 1 convention) and two-term linear
// recurrences A(n+2) = a A(n+1) + b A(n) with A0 = 1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majorder/bigint.hpp"
#include "majorder/interval.hpp"
#include "majorder/poset.hpp"

namespace majorder {

/// F(n) with F(0) = F(1) = 1, i.e. the classical Fibonacci number F(n+1).
BigNat fib(std::uint64_t n);

/// Immutable table F(0..n_max) built by the defining recurrence.
class FibSeq {
 public:
  explicit FibSeq(std::uint64_t n_max);
  const BigNat& operator[](std::uint64_t n) const { return terms_.at(n); }
  std::size_t size() const { return terms_.size(); }
  std::span<const BigNat> terms() const { return terms_; }

 private:
  std::vector<BigNat> terms_;
};

struct RecurrenceSpec {
  std::int64_t a = 1;   // > 0
  std::int64_t b = -1;  // < 0
  std::uint64_t a1 = 1; // A1; A0 is fixed to 1

  /// q(A1) = A1^2 - a A1 - b.
  BigNat q_at_a1() const;
  std::string to_string() const;  // "a=3,b=-1,A1=3"
};

/// [A0 .. A(n_max)]. Throws HypothesisViolated when a <= 0, b >= 0 or
/// q(A1) <= 0, and NegativeTerm at the first negative term.
std::vector<BigNat> recurrence_terms(const RecurrenceSpec& spec, std::uint64_t n_max);

enum class RatioDirection { Increasing, Decreasing };

const char* to_string(RatioDirection d);

/// Uniform strict direction of A(n+1)/A(n), decided exactly by comparing
/// A(n+1) A(n-1) with A(n)^2. Throws NotMonotone(n) at the first tie, flip,
/// or disagreement with `expected`.
RatioDirection ratio_monotone_check(std::span<const BigNat> terms,
                                    std::optional<RatioDirection> expected = {});

/// Terms indexed 0..max_index for a uniqueness search.
struct TermSource {
  std::string name;
  std::vector<BigNat> terms;
};

TermSource fib_even_source(std::uint64_t max_index);  // F(2n)
TermSource fib_odd_source(std::uint64_t max_index);   // F(2n+1)
TermSource recurrence_source(const RecurrenceSpec& spec, std::uint64_t max_index);

struct UniquenessReport {
  std::string source;
  std::uint64_t max_index = 0;
  std::uint64_t max_tuple_len = 0;
  std::uint64_t tuples = 0;
  std::uint64_t pairs_checked = 0;
  /// (n-tuple, m-tuple): equal products, n-tuple majorizes m-tuple, tuples differ.
  std::vector<std::pair<CanonicalSeq, CanonicalSeq>> violations;
  bool holds() const { return violations.empty(); }
};

/// All strictly decreasing index tuples over [1, max_index] with length
/// <= max_tuple_len, in enumeration order (length, then lexicographically
/// descending).
std::vector<CanonicalSeq> index_tuples(std::uint64_t max_index, std::uint64_t max_tuple_len);

UniquenessReport uniqueness_check(const TermSource& source, std::uint64_t max_index,
                                  std::uint64_t max_tuple_len);

/// Binet form (alpha^(n+1) - beta^(n+1)) / (alpha - beta) as an enclosure.
RealInterval binet_interval(std::uint64_t n, mpfr_prec_t precision);

/// True iff binet_interval(n) contains fib(n) for every n <= n_max.
bool binet_enclosure_check(std::uint64_t n_max, mpfr_prec_t precision);

}  // namespace majorder

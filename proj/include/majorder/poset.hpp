#pragma once

// Majorization order on finite sequences of positive integers.
//
// (a1..an) majorizes (b1..bk) when n <= k, every prefix sum of a up to n
// dominates the matching prefix sum of b, and sum(a) >= sum(b).

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace majorder {

using Part = std::uint32_t;

/// Nonempty, non-increasing sequence of positive integers.
class CanonicalSeq {
 public:
  /// Sorts `raw` non-increasing. Throws EmptySequence / NonPositiveEntry.
  static CanonicalSeq canonicalize(std::span<const std::int64_t> raw);
  static CanonicalSeq canonicalize(std::initializer_list<std::int64_t> raw);

  std::span<const Part> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  Part operator[](std::size_t i) const { return parts_[i]; }
  Part largest() const { return parts_.front(); }
  std::uint64_t sum() const { return sum_; }

  std::string to_string() const;  // "(3,2,1)"

  friend bool operator==(const CanonicalSeq&, const CanonicalSeq&) = default;

 private:
  friend class SequenceEnumerator;
  explicit CanonicalSeq(std::vector<Part> parts);

  std::vector<Part> parts_;
  std::uint64_t sum_ = 0;
};

CanonicalSeq canonicalize(std::span<const std::int64_t> raw);

/// Parses "3,1,2" (whitespace tolerated). Throws Error on malformed input.
CanonicalSeq parse_sequence(const std::string& text);

enum class DominanceResult { Equal, FirstMajorizesStrictly, SecondMajorizesStrictly, Incomparable };

const char* to_string(DominanceResult r);

bool majorizes(const CanonicalSeq& a, const CanonicalSeq& b);
DominanceResult compare(const CanonicalSeq& a, const CanonicalSeq& b);

/// The constant sequence (value repeated count times).
CanonicalSeq rectangle(Part value, std::size_t count);

/// Restartable cursor over every canonical sequence with sum <= max_sum (and
/// length <= max_len when given). Order: ascending sum, then ascending
/// length, then lexicographically descending parts.
class SequenceEnumerator {
 public:
  explicit SequenceEnumerator(std::uint32_t max_sum, std::optional<std::uint32_t> max_len = {});

  std::optional<CanonicalSeq> next();
  void restart();

 private:
  void start_block();
  bool advance_within_block();

  std::uint32_t max_sum_;
  std::uint32_t max_len_;
  std::uint32_t sum_ = 0;
  std::uint32_t len_ = 0;
  std::vector<Part> current_;
  bool done_ = false;
};

std::vector<CanonicalSeq> enumerate_sequences(std::uint32_t max_sum,
                                              std::optional<std::uint32_t> max_len = {});

/// Cursor over ordered pairs (a, b), both with sum <= max_sum, such that
/// a majorizes b (reflexive pairs included). Outer loop over a, inner over b,
/// each in enumeration order.
class ComparablePairs {
 public:
  explicit ComparablePairs(std::uint32_t max_sum);

  std::optional<std::pair<CanonicalSeq, CanonicalSeq>> next();
  void restart() { i_ = 0, j_ = 0; }
  const std::vector<CanonicalSeq>& universe() const { return universe_; }

 private:
  std::vector<CanonicalSeq> universe_;
  std::size_t i_ = 0;
  std::size_t j_ = 0;
};

/// Index pairs (i, j) into `universe` with universe[i] majorizing universe[j].
std::vector<std::pair<std::size_t, std::size_t>> comparable_index_pairs(
    const std::vector<CanonicalSeq>& universe);

std::vector<std::pair<CanonicalSeq, CanonicalSeq>> comparable_pairs(std::uint32_t max_sum);

}  // namespace majorder

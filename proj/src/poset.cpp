#include "majorder/poset.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "majorder/errors.hpp"

namespace majorder {

CanonicalSeq::CanonicalSeq(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (Part p : parts_) sum_ += p;
}

CanonicalSeq CanonicalSeq::canonicalize(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw EmptySequence();
  std::vector<Part> parts;
  parts.reserve(raw.size());
  for (std::int64_t v : raw) {
    if (v < 1) throw NonPositiveEntry(v);
    if (v > static_cast<std::int64_t>(UINT32_MAX)) throw Error("sequence entry too large");
    parts.push_back(static_cast<Part>(v));
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return CanonicalSeq(std::move(parts));
}

CanonicalSeq CanonicalSeq::canonicalize(std::initializer_list<std::int64_t> raw) {
  return canonicalize(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

std::string CanonicalSeq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

CanonicalSeq canonicalize(std::span<const std::int64_t> raw) {
  return CanonicalSeq::canonicalize(raw);
}

CanonicalSeq parse_sequence(const std::string& text) {
  std::vector<std::int64_t> raw;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error("empty entry in sequence '" + text + "'");
    std::string_view tok(item.data() + first, last - first + 1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error("malformed sequence entry '" + std::string(tok) + "'");
    }
    raw.push_back(v);
  }
  return CanonicalSeq::canonicalize(raw);
}

const char* to_string(DominanceResult r) {
  switch (r) {
    case DominanceResult::Equal: return "Equal";
    case DominanceResult::FirstMajorizesStrictly: return "FirstMajorizesStrictly";
    case DominanceResult::SecondMajorizesStrictly: return "SecondMajorizesStrictly";
    case DominanceResult::Incomparable: return "Incomparable";
  }
  return "?";
}

bool majorizes(const CanonicalSeq& a, const CanonicalSeq& b) {
  if (a.size() > b.size()) return false;
  std::uint64_t pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return a.sum() >= b.sum();
}

DominanceResult compare(const CanonicalSeq& a, const CanonicalSeq& b) {
  if (a == b) return DominanceResult::Equal;
  if (majorizes(a, b)) return DominanceResult::FirstMajorizesStrictly;
  if (majorizes(b, a)) return DominanceResult::SecondMajorizesStrictly;
  return DominanceResult::Incomparable;
}

CanonicalSeq rectangle(Part value, std::size_t count) {
  if (value < 1) throw NonPositiveEntry(value);
  if (count < 1) throw EmptySequence();
  std::vector<std::int64_t> raw(count, value);
  return CanonicalSeq::canonicalize(raw);
}

// --- enumeration -----------------------------------------------------------

SequenceEnumerator::SequenceEnumerator(std::uint32_t max_sum, std::optional<std::uint32_t> max_len)
    : max_sum_(max_sum), max_len_(max_len.value_or(max_sum)) {
  restart();
}

void SequenceEnumerator::restart() {
  sum_ = 1;
  len_ = 1;
  done_ = max_sum_ < 1 || max_len_ < 1;
  if (!done_) start_block();
}

// Lexicographically largest partition of sum_ into exactly len_ parts.
void SequenceEnumerator::start_block() {
  current_.assign(len_, 1);
  current_[0] = sum_ - len_ + 1;
}

// Steps current_ to the next partition (same sum and length) in
// lexicographically descending order.
bool SequenceEnumerator::advance_within_block() {
  if (len_ < 2) return false;
  std::uint64_t tail = current_[len_ - 1];
  for (std::size_t i = len_ - 1; i-- > 0;) {
    tail += current_[i];
    if (current_[i] < 2) continue;
    const Part cap = current_[i] - 1;
    const std::uint64_t rest = tail - cap;
    const std::uint64_t slots = len_ - i - 1;
    if (rest < slots || rest > slots * cap) continue;
    current_[i] = cap;
    std::uint64_t left = rest;
    for (std::size_t j = i + 1; j < len_; ++j) {
      const std::uint64_t after = len_ - j - 1;
      const auto v = static_cast<Part>(std::min<std::uint64_t>(cap, left - after));
      current_[j] = v;
      left -= v;
    }
    return true;
  }
  return false;
}

std::optional<CanonicalSeq> SequenceEnumerator::next() {
  if (done_) return std::nullopt;
  CanonicalSeq out(current_);
  if (!advance_within_block()) {
    ++len_;
    if (len_ > std::min(sum_, max_len_)) {
      ++sum_;
      len_ = 1;
      if (sum_ > max_sum_) {
        done_ = true;
        return out;
      }
    }
    start_block();
  }
  return out;
}

std::vector<CanonicalSeq> enumerate_sequences(std::uint32_t max_sum,
                                              std::optional<std::uint32_t> max_len) {
  std::vector<CanonicalSeq> out;
  SequenceEnumerator it(max_sum, max_len);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

// --- comparable pairs ------------------------------------------------------

ComparablePairs::ComparablePairs(std::uint32_t max_sum) : universe_(enumerate_sequences(max_sum)) {}

std::optional<std::pair<CanonicalSeq, CanonicalSeq>> ComparablePairs::next() {
  while (i_ < universe_.size()) {
    const std::size_t j = j_++;
    const std::size_t i = i_;
    if (j_ >= universe_.size()) {
      j_ = 0;
      ++i_;
    }
    if (majorizes(universe_[i], universe_[j])) return std::make_pair(universe_[i], universe_[j]);
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> comparable_index_pairs(
    const std::vector<CanonicalSeq>& universe) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (std::size_t j = 0; j < universe.size(); ++j) {
      if (majorizes(universe[i], universe[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<CanonicalSeq, CanonicalSeq>> comparable_pairs(std::uint32_t max_sum) {
  std::vector<std::pair<CanonicalSeq, CanonicalSeq>> out;
  ComparablePairs it(max_sum);
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace majorder

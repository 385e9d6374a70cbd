#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace majorder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySequence : public Error {
 public:
  EmptySequence() : Error("sequence must be nonempty") {}
};

class NonPositiveEntry : public Error {
 public:
  explicit NonPositiveEntry(std::int64_t value)
      : Error("sequence entries must be >= 1, got " + std::to_string(value)) {}
};

/// An enclosure could not be separated within the precision budget. This
/// signals a margin too tight for the budget, never a false statement.
class Unresolved : public Error {
 public:
  explicit Unresolved(const std::string& what) : Error("unresolved: " + what) {}
};

class PreconditionUnmet : public Error {
 public:
  explicit PreconditionUnmet(const std::string& what)
      : Error("precondition unmet: " + what) {}
};

class NotMonotone : public Error {
 public:
  explicit NotMonotone(std::uint64_t at)
      : Error("profile is not strictly monotone at x = " + std::to_string(at)), at_(at) {}
  std::uint64_t at() const { return at_; }

 private:
  std::uint64_t at_;
};

class F0NotOne : public Error {
 public:
  F0NotOne() : Error("hypothesis f(0) = 1 violated") {}
};

/// A computed ordering contradicts the monotone-map theorems.
class TheoremViolation : public Error {
 public:
  explicit TheoremViolation(const std::string& what) : Error("theorem violation: " + what) {}
};

class NegativeTerm : public Error {
 public:
  explicit NegativeTerm(std::uint64_t index)
      : Error("recurrence produced a negative term at n = " + std::to_string(index)),
        index_(index) {}
  std::uint64_t index() const { return index_; }

 private:
  std::uint64_t index_;
};

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

}  // namespace majorder

#pragma once

// Executable monotone-map theorems.
//
// Product form: if f(0) = 1 and f(x)/f(x-1) is strictly monotone, then
// a majorizing b forces prod f(a_i) >= prod f(b_j) (<= when decreasing),
// with equality only for identical sequences.
// Sum form: the same with f(0) = 0, differences f(x) - f(x-1) and sums.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "majorder/config.hpp"
#include "majorder/poset.hpp"
#include "majorder/power_product.hpp"
#include "majorder/recur.hpp"

namespace majorder {

enum class FunctionTag {
  Factorial,          // x!
  FactOverSelfPower,  // x!/x^x
  RatioRoot,          // f(1) = 3/2, x/((x-1)!)^(1/(x-1))
  RatioRootPower,     // f(1) = 2, x^(x+1)/((x-1)!)^(1/(x-1))
  F1,                 // ((x+1)!)^(1/(x+2))
  F2,                 // ((x+2)!)^(1/(x+2))
  FibEvenIndex,       // F(2x)
  FibOddIndex,        // F(2x+1)
  Recurrence,         // A(x)
  Custom,
};

/// A catalog function N -> positive reals whose values are power products.
class BuiltinF {
 public:
  using Evaluator = std::function<PowerProduct(std::uint64_t)>;

  static BuiltinF of(FunctionTag tag);
  static BuiltinF recurrence(const RecurrenceSpec& spec);
  static BuiltinF custom(std::string name, Evaluator eval);
  /// Accepts the kebab-case names below (e.g. "fact-over-self-power").
  static BuiltinF parse(const std::string& name);

  FunctionTag tag() const { return tag_; }
  const std::string& name() const { return name_; }

  PowerProduct operator()(std::uint64_t x) const;
  /// f(0), ..., f(x_max).
  std::vector<PowerProduct> table(std::uint64_t x_max) const;

 private:
  BuiltinF(FunctionTag tag, std::string name, Evaluator eval)
      : tag_(tag), name_(std::move(name)), eval_(std::move(eval)) {}

  FunctionTag tag_;
  std::string name_;
  Evaluator eval_;
  std::optional<RecurrenceSpec> spec_;
};

/// Tags with a fixed definition, in catalog order.
const std::vector<FunctionTag>& catalog_tags();
const char* to_string(FunctionTag tag);

enum class CertificateKind { RatioIncreasing, RatioDecreasing, DiffIncreasing, DiffDecreasing };

const char* to_string(CertificateKind k);

struct MonotoneCertificate {
  std::string function;
  CertificateKind kind;
  std::uint64_t x_max = 0;  // range is [1, x_max]
  /// Consecutive ratios (or differences) verified: f(1)/f(0) .. f(x_max)/f(x_max-1).
  std::uint64_t witness_checked = 0;
  /// Highest precision the interval route needed (diff certificates only).
  mpfr_prec_t max_precision_used = 0;

  bool increasing() const {
    return kind == CertificateKind::RatioIncreasing || kind == CertificateKind::DiffIncreasing;
  }
  bool is_ratio() const {
    return kind == CertificateKind::RatioIncreasing || kind == CertificateKind::RatioDecreasing;
  }
  friend bool operator==(const MonotoneCertificate&, const MonotoneCertificate&) = default;
};

/// Exactly checks f(x)/f(x-1) < f(x+1)/f(x) (or >) for 1 <= x < x_max.
/// Throws F0NotOne, NotMonotone(x) or PreconditionUnmet (x_max < 2).
MonotoneCertificate ratio_profile(const BuiltinF& f, std::uint64_t x_max,
                                  const Config& config = default_config());

/// Checks the differences of f(x) - f(0) by interval escalation starting at
/// `precision`. Throws NotMonotone(x) or Unresolved.
MonotoneCertificate diff_profile(const BuiltinF& f, std::uint64_t x_max, mpfr_prec_t precision,
                                 const Config& config = default_config());

enum class InequalityOutcome { StrictlyGreater, StrictlyLess, Equal };

const char* to_string(InequalityOutcome o);

/// prod f(a_i) vs prod f(b_j), exactly. Throws PreconditionUnmet when a does
/// not majorize b or the certificate does not cover the parts, and
/// TheoremViolation when the ordering contradicts the certificate.
InequalityOutcome verify_product_inequality(const BuiltinF& f, const CanonicalSeq& a,
                                            const CanonicalSeq& b, const MonotoneCertificate& cert,
                                            const Config& config = default_config());

/// Same with precomputed values table[x] = f(x) covering the parts.
InequalityOutcome verify_product_inequality(std::span<const PowerProduct> table,
                                            const CanonicalSeq& a, const CanonicalSeq& b,
                                            const MonotoneCertificate& cert,
                                            const Config& config = default_config());

/// sum (f(a_i) - f(0)) vs sum (f(b_j) - f(0)) by interval escalation.
/// Equal only for identical sequences. Throws Unresolved / TheoremViolation.
InequalityOutcome verify_sum_inequality(const BuiltinF& f, const CanonicalSeq& a,
                                        const CanonicalSeq& b, const MonotoneCertificate& cert,
                                        mpfr_prec_t precision,
                                        const Config& config = default_config());

/// Enclosure of sum_i f(s_i).
RealInterval sum_interval(const BuiltinF& f, const CanonicalSeq& s, mpfr_prec_t precision);

}  // namespace majorder

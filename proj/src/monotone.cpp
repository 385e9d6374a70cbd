#include "majorder/monotone.hpp"

#include <algorithm>

#include "majorder/errors.hpp"

namespace majorder {

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::RatioIncreasing: return "RatioIncreasing";
    case CertificateKind::RatioDecreasing: return "RatioDecreasing";
    case CertificateKind::DiffIncreasing: return "DiffIncreasing";
    case CertificateKind::DiffDecreasing: return "DiffDecreasing";
  }
  return "?";
}

const char* to_string(InequalityOutcome o) {
  switch (o) {
    case InequalityOutcome::StrictlyGreater: return "StrictlyGreater";
    case InequalityOutcome::StrictlyLess: return "StrictlyLess";
    case InequalityOutcome::Equal: return "Equal";
  }
  return "?";
}

MonotoneCertificate ratio_profile(const BuiltinF& f, std::uint64_t x_max, const Config& config) {
  if (x_max < 2) throw PreconditionUnmet("ratio_profile needs x_max >= 2");
  const auto values = f.table(x_max);
  if (!values[0].is_one()) throw F0NotOne();

  std::optional<Ordering> direction;
  for (std::uint64_t x = 1; x < x_max; ++x) {
    // f(x+1)/f(x) vs f(x)/f(x-1), cross-multiplied.
    const Ordering o = pp_compare(values[x + 1] * values[x - 1], values[x] * values[x], config);
    if (o == Ordering::Equal || (direction && *direction != o)) throw NotMonotone(x);
    direction = o;
  }
  const auto kind = *direction == Ordering::Greater ? CertificateKind::RatioIncreasing
                                                    : CertificateKind::RatioDecreasing;
  return {f.name(), kind, x_max, x_max, 0};
}

namespace {

// Exact sign of sum c_i v_i when every v_i is rational, else nullopt.
std::optional<int> exact_linear_sign(std::span<const PowerProduct> values, std::span<const long> coeffs,
                                     const Config& config) {
  BigRat total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto v = pp_exact_rational(values[i], config.blowup_cap_bits);
    if (!v) return std::nullopt;
    total += coeffs[i] * *v;
  }
  return sgn(total);
}

// Sign of sum c_i v_i by interval escalation; 0 when unresolved at max.
struct SignResult {
  int sign;
  mpfr_prec_t bits;
};

SignResult interval_linear_sign(std::span<const PowerProduct> values, std::span<const long> coeffs,
                                mpfr_prec_t start, const Config& config) {
  for (mpfr_prec_t bits = start; bits <= config.escalation.max_bits; bits *= 2) {
    RealInterval total(bits);
    for (std::size_t i = 0; i < values.size(); ++i) {
      total = total + RealInterval::exact(coeffs[i], bits) * pp_interval_eval(values[i], bits);
    }
    if (const int s = total.certain_sign()) return {s, bits};
  }
  return {0, config.escalation.max_bits};
}

SignResult linear_sign(std::span<const PowerProduct> values, std::span<const long> coeffs,
                       mpfr_prec_t start, const Config& config) {
  if (auto s = exact_linear_sign(values, coeffs, config)) return {*s, 0};
  return interval_linear_sign(values, coeffs, start, config);
}

}  // namespace

MonotoneCertificate diff_profile(const BuiltinF& f, std::uint64_t x_max, mpfr_prec_t precision,
                                 const Config& config) {
  if (x_max < 2) throw PreconditionUnmet("diff_profile needs x_max >= 2");
  const auto values = f.table(x_max);
  std::optional<int> direction;
  mpfr_prec_t used = 0;
  const long coeffs[3] = {1, -2, 1};
  for (std::uint64_t x = 1; x < x_max; ++x) {
    // (f(x+1) - f(x)) - (f(x) - f(x-1)); the f(0) shift cancels.
    const PowerProduct window[3] = {values[x + 1], values[x], values[x - 1]};
    const SignResult s = linear_sign(window, coeffs, precision, config);
    if (s.sign == 0) {
      if (exact_linear_sign(window, coeffs, config)) throw NotMonotone(x);
      throw Unresolved("second difference of " + f.name() + " at x = " + std::to_string(x));
    }
    if (direction && *direction != s.sign) throw NotMonotone(x);
    direction = s.sign;
    used = std::max(used, s.bits);
  }
  const auto kind = *direction > 0 ? CertificateKind::DiffIncreasing : CertificateKind::DiffDecreasing;
  return {f.name(), kind, x_max, x_max, used};
}

namespace {

void check_pair(const CanonicalSeq& a, const CanonicalSeq& b, const MonotoneCertificate& cert,
                bool want_ratio) {
  if (!majorizes(a, b)) {
    throw PreconditionUnmet(a.to_string() + " does not majorize " + b.to_string());
  }
  if (cert.is_ratio() != want_ratio) throw PreconditionUnmet("certificate kind does not match the inequality");
  if (std::max(a.largest(), b.largest()) > cert.x_max) {
    throw PreconditionUnmet("certificate range [1, " + std::to_string(cert.x_max) +
                            "] does not cover the parts");
  }
}

PowerProduct product_of(std::span<const PowerProduct> table, const CanonicalSeq& s) {
  PowerProduct p;
  for (Part x : s.parts()) p = p * table[x];
  return p;
}

InequalityOutcome expected_outcome(const MonotoneCertificate& cert) {
  return cert.increasing() ? InequalityOutcome::StrictlyGreater : InequalityOutcome::StrictlyLess;
}

}  // namespace

InequalityOutcome verify_product_inequality(std::span<const PowerProduct> table,
                                            const CanonicalSeq& a, const CanonicalSeq& b,
                                            const MonotoneCertificate& cert, const Config& config) {
  check_pair(a, b, cert, true);
  if (std::max(a.largest(), b.largest()) >= table.size()) {
    throw PreconditionUnmet("value table does not cover the parts");
  }
  const Ordering o = pp_compare(product_of(table, a), product_of(table, b), config);
  const InequalityOutcome got = o == Ordering::Equal     ? InequalityOutcome::Equal
                                : o == Ordering::Greater ? InequalityOutcome::StrictlyGreater
                                                         : InequalityOutcome::StrictlyLess;
  const InequalityOutcome want = a == b ? InequalityOutcome::Equal : expected_outcome(cert);
  if (got != want) {
    throw TheoremViolation(cert.function + ": " + a.to_string() + " vs " + b.to_string() +
                           " gave " + to_string(got) + ", expected " + to_string(want));
  }
  return got;
}

InequalityOutcome verify_product_inequality(const BuiltinF& f, const CanonicalSeq& a,
                                            const CanonicalSeq& b, const MonotoneCertificate& cert,
                                            const Config& config) {
  check_pair(a, b, cert, true);
  const auto table = f.table(std::max(a.largest(), b.largest()));
  return verify_product_inequality(table, a, b, cert, config);
}

RealInterval sum_interval(const BuiltinF& f, const CanonicalSeq& s, mpfr_prec_t precision) {
  RealInterval total(precision);
  for (Part x : s.parts()) total = total + pp_interval_eval(f(x), precision);
  return total;
}

InequalityOutcome verify_sum_inequality(const BuiltinF& f, const CanonicalSeq& a,
                                        const CanonicalSeq& b, const MonotoneCertificate& cert,
                                        mpfr_prec_t precision, const Config& config) {
  check_pair(a, b, cert, false);
  if (a == b) return InequalityOutcome::Equal;

  // sum (f(a_i) - f(0)) - sum (f(b_j) - f(0)) as a signed combination.
  std::vector<PowerProduct> values;
  std::vector<long> coeffs;
  for (Part x : a.parts()) values.push_back(f(x)), coeffs.push_back(1);
  for (Part x : b.parts()) values.push_back(f(x)), coeffs.push_back(-1);
  const long zero_count = static_cast<long>(b.size()) - static_cast<long>(a.size());
  if (zero_count != 0) values.push_back(f(0)), coeffs.push_back(zero_count);

  const SignResult s = linear_sign(values, coeffs, precision, config);
  if (s.sign == 0) {
    if (exact_linear_sign(values, coeffs, config)) {
      throw TheoremViolation(cert.function + ": equal shifted sums for " + a.to_string() + " and " +
                             b.to_string());
    }
    throw Unresolved("shifted sums of " + f.name() + " for " + a.to_string() + " vs " + b.to_string());
  }
  const InequalityOutcome got = s.sign > 0 ? InequalityOutcome::StrictlyGreater : InequalityOutcome::StrictlyLess;
  if (got != expected_outcome(cert)) {
    throw TheoremViolation(cert.function + ": " + a.to_string() + " vs " + b.to_string() + " gave " +
                           to_string(got) + ", expected " + to_string(expected_outcome(cert)));
  }
  return got;
}

}  // namespace majorder

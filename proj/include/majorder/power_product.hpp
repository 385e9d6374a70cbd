#pragma once

// Formal products  base_1^e_1 * ... * base_m^e_m  with natural bases and
// rational exponents. Every value in the function catalog is one of these,
// which lets radical expressions be compared exactly.

#include <optional>
#include <string>
#include <vector>

#include "majorder/bigint.hpp"
#include "majorder/config.hpp"
#include "majorder/interval.hpp"

namespace majorder {

enum class Ordering { Less, Equal, Greater };

const char* to_string(Ordering o);
Ordering flip(Ordering o);

class PowerProduct {
 public:
  struct Factor {
    BigNat base;
    BigRat exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  /// The empty product, 1.
  PowerProduct() = default;

  /// Normalizes: bases ascending and distinct, base 1 and zero exponents
  /// dropped. Throws Error for a zero base.
  static PowerProduct from_factors(std::vector<Factor> factors);
  /// n >= 1, with small prime factors split out.
  static PowerProduct integer(const BigNat& n);
  static PowerProduct integer(unsigned long n) { return integer(BigNat(n)); }
  /// q > 0.
  static PowerProduct rational(const BigRat& q);
  /// n!, fully factored into primes.
  static PowerProduct factorial(std::uint64_t n);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  PowerProduct pow(const BigRat& e) const;
  PowerProduct inverse() const { return pow(BigRat(-1)); }

  /// "2^(3/2)*3", "1" for the empty product.
  std::string to_string() const;

  friend PowerProduct operator*(const PowerProduct& x, const PowerProduct& y);
  friend PowerProduct operator/(const PowerProduct& x, const PowerProduct& y);
  /// Structural identity of normal forms.
  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

 private:
  std::vector<Factor> factors_;
};

PowerProduct pp_mul(const PowerProduct& x, const PowerProduct& y);

enum class CompareMethod { Structural, ExponentClearing, Interval };

const char* to_string(CompareMethod m);

struct ComparisonOutcome {
  Ordering order;
  CompareMethod method;
  /// Bits used by the interval route; 0 for exact routes.
  mpfr_prec_t precision = 0;
};

/// Estimated bit size of the two big integers exponent clearing would build
/// for x / y.
std::uint64_t clearing_cost_bits(const PowerProduct& quotient);

/// Exact ordering of the represented reals. Exponent clearing first; when
/// its cost exceeds config.blowup_cap_bits, interval escalation. Throws
/// Unresolved if neither route decides.
ComparisonOutcome pp_compare_detailed(const PowerProduct& x, const PowerProduct& y,
                                      const Config& config = default_config());
Ordering pp_compare(const PowerProduct& x, const PowerProduct& y,
                    const Config& config = default_config());

/// Enclosure with relative width <= 2^(1 - precision/2). Requires
/// precision >= 32.
RealInterval pp_interval_eval(const PowerProduct& x, mpfr_prec_t precision);

/// The exact value when every exponent is an integer and the expansion stays
/// below `cap_bits`; nullopt otherwise.
std::optional<BigRat> pp_exact_rational(const PowerProduct& x, std::uint64_t cap_bits);

/// Enclosure of ln(x).
RealInterval pp_log_interval(const PowerProduct& x, mpfr_prec_t precision);

}  // namespace majorder

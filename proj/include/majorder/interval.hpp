#pragma once

// Outward-rounded interval arithmetic on MPFR binary floats. Every operation
// rounds lower bounds toward -inf and upper bounds toward +inf, so the exact
// result of the corresponding real operation always lies inside.

#include <mpfr.h>

#include <string>

#include "majorder/bigint.hpp"

namespace majorder {

/// Owning handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Exact conversion (every finite binary float is rational).
  BigRat to_rational() const;
  std::string to_decimal(int digits, mpfr_rnd_t rounding) const;

 private:
  void release();
  mpfr_t value_;
  bool live_ = false;
};

class RealInterval {
 public:
  using Bits = mpfr_prec_t;

  /// The degenerate interval [0, 0].
  explicit RealInterval(Bits precision);

  static RealInterval exact(const BigRat& q, Bits precision);
  static RealInterval exact(const BigNat& n, Bits precision);
  static RealInterval exact(long n, Bits precision);
  /// Hull of two rationals lo <= hi.
  static RealInterval hull(const BigRat& lo, const BigRat& hi, Bits precision);
  /// Takes ownership of two bounds with lo <= hi.
  static RealInterval from_bounds(BigFloat lo, BigFloat hi, Bits precision);
  static RealInterval pi(Bits precision);
  static RealInterval euler_gamma(Bits precision);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Bits precision() const { return precision_; }

  bool contains(const BigRat& q) const;
  bool contains(const BigNat& n) const;
  bool contains_zero() const;
  /// Every point of *this is < every point of other.
  bool certainly_less(const RealInterval& other) const;
  bool certainly_greater(const RealInterval& other) const { return other.certainly_less(*this); }
  bool certainly_positive() const;
  bool certainly_negative() const;
  /// Sign when 0 is excluded; 0 when the interval straddles or touches 0.
  int certain_sign() const;

  /// log2 of (hi - lo); -inf for a point interval.
  double log2_width() const;
  /// log2 of (hi - lo) / min(|lo|, |hi|); requires 0 not in the interval.
  double log2_relative_width() const;

  std::string lo_decimal(int digits = 40) const { return lo_.to_decimal(digits, MPFR_RNDD); }
  std::string hi_decimal(int digits = 40) const { return hi_.to_decimal(digits, MPFR_RNDU); }
  double midpoint() const;

  /// Widens *this to include `margin` on both sides (margin >= 0, exact).
  RealInterval widened(const BigRat& margin) const;

  friend RealInterval operator+(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator-(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator*(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator/(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator-(const RealInterval& x);

 private:
  RealInterval(BigFloat lo, BigFloat hi, Bits precision);

  BigFloat lo_;
  BigFloat hi_;
  Bits precision_;

  friend RealInterval log(const RealInterval& x);
  friend RealInterval exp(const RealInterval& x);
  friend RealInterval sqrt(const RealInterval& x);
  friend RealInterval pow(const RealInterval& x, unsigned long n);
};

/// Requires lo > 0.
RealInterval log(const RealInterval& x);
RealInterval exp(const RealInterval& x);
/// Requires lo >= 0.
RealInterval sqrt(const RealInterval& x);
RealInterval pow(const RealInterval& x, unsigned long n);

}  // namespace majorder

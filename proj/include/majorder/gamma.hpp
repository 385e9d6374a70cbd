#pragma once

// Rigorous enclosures of ln Gamma and digamma at positive rational points.
//
// Both shift the argument upward with Gamma(x+1) = x Gamma(x) and then sum
// the Stirling series exactly in rationals. For real y > 0 the truncation
// error of either series is bounded by the first omitted term, which is
// added to both sides of the enclosure.

#include "majorder/bigint.hpp"
#include "majorder/config.hpp"
#include "majorder/interval.hpp"

namespace majorder {

/// Exact Bernoulli number B_n (B_1 = -1/2, odd n > 1 give 0).
BigRat bernoulli(unsigned n);

RealInterval ln_gamma_interval(const BigRat& x, mpfr_prec_t precision,
                               const Config& config = default_config());
RealInterval digamma_interval(const BigRat& x, mpfr_prec_t precision,
                              const Config& config = default_config());

struct TheoremCResult {
  bool bound1 = false;  // ln Gamma(x) > (x - 1/2) ln x - x
  bool bound2 = false;  // psi(x) < ln x
  mpfr_prec_t precision = 0;
  RealInterval ln_gamma{64};
  RealInterval stirling_floor{64};  // (x - 1/2) ln x - x
  RealInterval digamma{64};
  RealInterval log_x{64};
};

/// Decides both Theorem C bounds at a rational x > 1, doubling precision
/// from esc.start_bits until both comparisons separate. Throws Unresolved
/// when esc.max_bits is exceeded and PreconditionUnmet when x <= 1.
TheoremCResult theorem_c_check(const BigRat& x, const Escalation& esc = {},
                               const Config& config = default_config());

/// Same as theorem_c_check for every x in [lo, hi] at once. When lo < hi,
/// lo >= 3/2 is required so that ln Gamma is increasing on the hull.
TheoremCResult theorem_c_check_hull(const BigRat& lo, const BigRat& hi,
                                    const Escalation& esc = {},
                                    const Config& config = default_config());

/// Rational lower and upper bounds for e with a gap below 2^-bits.
std::pair<BigRat, BigRat> euler_e_bounds(mpfr_prec_t bits);

struct SandwichResult {
  bool digamma_lower = false;    // ln(x-1) < psi(x)
  bool digamma_upper = false;    // psi(x) < ln x
  bool ln_gamma_lower = false;   // x ln x - x + 1 < ln Gamma(x+1)
  bool ln_gamma_upper = false;   // ln Gamma(x+1) < (x+1) ln(x+1) - x
  mpfr_prec_t precision = 0;
  bool all() const { return digamma_lower && digamma_upper && ln_gamma_lower && ln_gamma_upper; }
};

/// Classical digamma and ln Gamma sandwich bounds at rational x > 1.
SandwichResult gamma_sandwich_check(const BigRat& x, const Escalation& esc = {},
                                    const Config& config = default_config());

}  // namespace majorder

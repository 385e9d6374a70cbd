#include "majorder/gamma.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "majorder/errors.hpp"

namespace majorder {

namespace {

// Even Bernoulli numbers B_2, B_4, ..., grown on demand from tangent
// numbers (integer-only recurrence, O(n^2) multiplications).
class BernoulliTable {
 public:
  BigRat even(unsigned k) {  // B_{2k}, k >= 1
    std::lock_guard lock(mutex_);
    if (k > values_.size()) grow(std::max<unsigned>(k, 2 * static_cast<unsigned>(values_.size())));
    return values_[k - 1];
  }

 private:
  void grow(unsigned n) {
    std::vector<BigNat> t(n + 1);
    t[1] = 1;
    for (unsigned k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned k = 2; k <= n; ++k) {
      for (unsigned j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    values_.clear();
    values_.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
      BigNat four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
      BigRat b(BigNat(2 * k) * t[k], four_k * (four_k - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      values_.push_back(b);
    }
  }

  std::mutex mutex_;
  std::vector<BigRat> values_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

// Rigorous upper bound on 2^-bits as a rational.
BigRat two_pow_neg(mpfr_prec_t bits) {
  BigNat d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  return BigRat(1, d);
}

BigRat rat_pow(const BigRat& y, unsigned long e) {
  BigRat out;
  mpz_pow_ui(out.get_num_mpz_t(), y.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), y.get_den_mpz_t(), e);
  return out;  // already in lowest terms
}

// Shift target: large enough that the Stirling series reaches 2^-bits
// after a modest number of terms.
struct Shifted {
  BigRat y;        // x + shift
  unsigned shift;  // number of recurrence steps
};

Shifted shift_argument(const BigRat& x, mpfr_prec_t precision, const Config& config) {
  const BigRat target(std::max<unsigned long>(config.stirling_min_argument,
                                              static_cast<unsigned long>(precision)));
  unsigned n = 0;
  if (x < target) {
    BigRat gap = target - x;
    BigNat c;
    mpz_cdiv_q(c.get_mpz_t(), gap.get_num_mpz_t(), gap.get_den_mpz_t());
    n = static_cast<unsigned>(c.get_ui());
  }
  return {x + n, n};
}

void require_positive(const BigRat& x) {
  if (x <= 0) throw PreconditionUnmet("argument must be > 0, got " + x.get_str());
}

}  // namespace

BigRat bernoulli(unsigned n) {
  if (n == 0) return 1;
  if (n == 1) return BigRat(-1, 2);
  if (n % 2) return 0;
  return table().even(n / 2);
}

RealInterval ln_gamma_interval(const BigRat& x, mpfr_prec_t precision, const Config& config) {
  require_positive(x);
  const mpfr_prec_t bits = precision + config.guard_bits;
  const auto [y, shift] = shift_argument(x, precision, config);

  // ln Gamma(x) = ln Gamma(y) - ln(x (x+1) ... (x+shift-1))
  BigRat rising = 1;
  for (unsigned i = 0; i < shift; ++i) rising *= x + i;

  // sum_{k=1}^{K} B_2k / (2k (2k-1) y^(2k-1)), stopped once the first
  // omitted term drops below 2^-bits.
  const BigRat tolerance = two_pow_neg(bits);
  BigRat series = 0;
  BigRat remainder;
  for (unsigned k = 1;; ++k) {
    const BigRat term = bernoulli(2 * k) / (BigRat(2 * k * (2 * k - 1)) * rat_pow(y, 2 * k - 1));
    if (abs(term) <= tolerance || k > 8u * static_cast<unsigned>(bits)) {
      remainder = abs(term);
      break;
    }
    series += term;
  }

  const RealInterval ly = log(RealInterval::exact(y, bits));
  const RealInterval two_pi = RealInterval::exact(2L, bits) * RealInterval::pi(bits);
  RealInterval out = RealInterval::exact(y - BigRat(1, 2), bits) * ly - RealInterval::exact(y, bits) +
                     log(two_pi) * RealInterval::exact(BigRat(1, 2), bits) +
                     RealInterval::exact(series, bits);
  if (shift > 0) out = out - log(RealInterval::exact(rising, bits));
  RealInterval widened = out.widened(remainder);
  return RealInterval::from_bounds(widened.lo(), widened.hi(), precision);
}

RealInterval digamma_interval(const BigRat& x, mpfr_prec_t precision, const Config& config) {
  require_positive(x);
  const mpfr_prec_t bits = precision + config.guard_bits;
  const auto [y, shift] = shift_argument(x, precision, config);

  // psi(x) = psi(y) - sum_{i<shift} 1/(x+i)
  // psi(y) = ln y - 1/(2y) - sum_{k=1}^{K} B_2k / (2k y^2k)
  BigRat rational = -BigRat(1) / (2 * y);
  for (unsigned i = 0; i < shift; ++i) rational -= 1 / (x + i);

  const BigRat tolerance = two_pow_neg(bits);
  BigRat remainder;
  for (unsigned k = 1;; ++k) {
    const BigRat term = bernoulli(2 * k) / (BigRat(2 * k) * rat_pow(y, 2 * k));
    if (abs(term) <= tolerance || k > 8u * static_cast<unsigned>(bits)) {
      remainder = abs(term);
      break;
    }
    rational -= term;
  }

  RealInterval out = log(RealInterval::exact(y, bits)) + RealInterval::exact(rational, bits);
  RealInterval widened = out.widened(remainder);
  return RealInterval::from_bounds(widened.lo(), widened.hi(), precision);
}

// --- Theorem C -------------------------------------------------------------

namespace {

// 1 certainly greater, -1 certainly less, 0 undecided.
int decide(const RealInterval& a, const RealInterval& b) {
  if (a.certainly_greater(b)) return 1;
  if (a.certainly_less(b)) return -1;
  return 0;
}

RealInterval join_hull(const RealInterval& at_lo, const RealInterval& at_hi, mpfr_prec_t bits) {
  return RealInterval::from_bounds(at_lo.lo(), at_hi.hi(), bits);
}

}  // namespace

TheoremCResult theorem_c_check_hull(const BigRat& lo, const BigRat& hi, const Escalation& esc,
                                    const Config& config) {
  if (lo <= 1) throw PreconditionUnmet("Theorem C needs x > 1, got " + lo.get_str());
  if (hi < lo) throw PreconditionUnmet("empty argument hull");
  const bool point = lo == hi;
  if (!point && lo < BigRat(3, 2)) {
    throw PreconditionUnmet("argument hull must lie in [3/2, inf) where ln Gamma increases");
  }

  for (mpfr_prec_t bits = esc.start_bits; bits <= esc.max_bits; bits *= 2) {
    const mpfr_prec_t work = bits + config.guard_bits;
    const RealInterval xs = RealInterval::hull(lo, hi, work);
    TheoremCResult r;
    r.precision = bits;
    if (point) {
      r.ln_gamma = ln_gamma_interval(lo, bits, config);
      r.digamma = digamma_interval(lo, bits, config);
    } else {
      // ln Gamma increasing on [3/2, inf); psi increasing on (0, inf).
      r.ln_gamma = join_hull(ln_gamma_interval(lo, bits, config), ln_gamma_interval(hi, bits, config), bits);
      r.digamma = join_hull(digamma_interval(lo, bits, config), digamma_interval(hi, bits, config), bits);
    }
    r.log_x = log(xs);
    r.stirling_floor = (xs - RealInterval::exact(BigRat(1, 2), work)) * r.log_x - xs;

    const int first = decide(r.ln_gamma, r.stirling_floor);
    const int second = decide(r.digamma, r.log_x);
    if (first != 0 && second != 0) {
      r.bound1 = first > 0;
      r.bound2 = second < 0;
      return r;
    }
  }
  throw Unresolved("Theorem C bounds at x in [" + lo.get_str() + ", " + hi.get_str() + "]");
}

TheoremCResult theorem_c_check(const BigRat& x, const Escalation& esc, const Config& config) {
  return theorem_c_check_hull(x, x, esc, config);
}

std::pair<BigRat, BigRat> euler_e_bounds(mpfr_prec_t bits) {
  BigFloat lo(bits), hi(bits);
  mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

SandwichResult gamma_sandwich_check(const BigRat& x, const Escalation& esc, const Config& config) {
  if (x <= 1) throw PreconditionUnmet("sandwich bounds need x > 1, got " + x.get_str());
  for (mpfr_prec_t bits = esc.start_bits; bits <= esc.max_bits; bits *= 2) {
    const mpfr_prec_t work = bits + config.guard_bits;
    const RealInterval xi = RealInterval::exact(x, work);
    const RealInterval one = RealInterval::exact(1L, work);
    const RealInterval psi = digamma_interval(x, bits, config);
    const RealInterval lg1 = ln_gamma_interval(x + 1, bits, config);
    const RealInterval lx = log(xi);
    const RealInterval lxm1 = log(xi - one);
    const RealInterval lxp1 = log(xi + one);
    const RealInterval lower = xi * lx - xi + one;
    const RealInterval upper = (xi + one) * lxp1 - xi;

    const int d1 = decide(psi, lxm1);
    const int d2 = decide(psi, lx);
    const int d3 = decide(lg1, lower);
    const int d4 = decide(lg1, upper);
    if (d1 && d2 && d3 && d4) {
      return {d1 > 0, d2 < 0, d3 > 0, d4 < 0, bits};
    }
  }
  throw Unresolved("gamma sandwich bounds at x = " + x.get_str());
}

}  // namespace majorder

#include "majorder/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "majorder/errors.hpp"

namespace majorder {

// --- BigFloat --------------------------------------------------------------

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
  live_ = true;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);  // same precision: exact
  live_ = true;
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs by swapping with a fresh minimal value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  live_ = true;
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { release(); }

void BigFloat::release() {
  if (live_) mpfr_clear(value_);
  live_ = false;
}

BigRat BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw Error("non-finite float has no rational value");
  BigRat q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string BigFloat::to_decimal(int digits, mpfr_rnd_t rounding) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*R*e", std::max(digits - 1, 0), rounding, value_) < 0) {
    throw Error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

// --- RealInterval ----------------------------------------------------------

namespace {

using Bits = RealInterval::Bits;

Bits join(const RealInterval& x, const RealInterval& y) {
  return std::max(x.precision(), y.precision());
}

double log2_of(mpfr_srcptr v) {
  if (mpfr_zero_p(v)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v, MPFR_RNDU);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

}  // namespace

RealInterval::RealInterval(Bits precision)
    : lo_(precision), hi_(precision), precision_(precision) {}

RealInterval::RealInterval(BigFloat lo, BigFloat hi, Bits precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_(precision) {}

RealInterval RealInterval::exact(const BigRat& q, Bits precision) {
  RealInterval r(precision);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(const BigNat& n, Bits precision) {
  RealInterval r(precision);
  mpfr_set_z(r.lo_.get(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), n.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(long n, Bits precision) {
  RealInterval r(precision);
  mpfr_set_si(r.lo_.get(), n, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), n, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::hull(const BigRat& lo, const BigRat& hi, Bits precision) {
  if (lo > hi) throw Error("interval hull with lo > hi");
  RealInterval r(precision);
  mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_bounds(BigFloat lo, BigFloat hi, Bits precision) {
  if (mpfr_greater_p(lo.get(), hi.get())) throw Error("interval bounds out of order");
  return RealInterval(std::move(lo), std::move(hi), precision);
}

RealInterval RealInterval::pi(Bits precision) {
  RealInterval r(precision);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::euler_gamma(Bits precision) {
  RealInterval r(precision);
  mpfr_const_euler(r.lo_.get(), MPFR_RNDD);
  mpfr_const_euler(r.hi_.get(), MPFR_RNDU);
  return r;
}

bool RealInterval::contains(const BigRat& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const BigNat& n) const {
  return mpfr_cmp_z(lo_.get(), n.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_.get(), n.get_mpz_t()) >= 0;
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RealInterval::certainly_less(const RealInterval& other) const {
  return mpfr_less_p(hi_.get(), other.lo_.get()) != 0;
}

bool RealInterval::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool RealInterval::certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }

int RealInterval::certain_sign() const {
  if (certainly_positive()) return 1;
  if (certainly_negative()) return -1;
  return 0;
}

double RealInterval::log2_width() const {
  BigFloat w(precision_ + 2);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return log2_of(w.get());
}

double RealInterval::log2_relative_width() const {
  if (contains_zero()) throw Error("relative width undefined for an interval containing 0");
  BigFloat w(precision_ + 2);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  BigFloat m(precision_ + 2);
  if (mpfr_sgn(lo_.get()) > 0) {
    mpfr_set(m.get(), lo_.get(), MPFR_RNDD);
  } else {
    mpfr_neg(m.get(), hi_.get(), MPFR_RNDD);
  }
  mpfr_div(w.get(), w.get(), m.get(), MPFR_RNDU);
  return log2_of(w.get());
}

double RealInterval::midpoint() const {
  BigFloat m(precision_ + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

RealInterval RealInterval::widened(const BigRat& margin) const {
  if (margin < 0) throw Error("negative widening margin");
  RealInterval r(*this);
  BigFloat m(precision_);
  mpfr_set_q(m.get(), margin.get_mpq_t(), MPFR_RNDU);
  mpfr_sub(r.lo_.get(), lo_.get(), m.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), hi_.get(), m.get(), MPFR_RNDU);
  return r;
}

RealInterval operator+(const RealInterval& x, const RealInterval& y) {
  RealInterval r(join(x, y));
  mpfr_add(r.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval operator-(const RealInterval& x, const RealInterval& y) {
  RealInterval r(join(x, y));
  mpfr_sub(r.lo_.get(), x.lo_.get(), y.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), x.hi_.get(), y.lo_.get(), MPFR_RNDU);
  return r;
}

RealInterval operator-(const RealInterval& x) {
  RealInterval r(x.precision_);
  mpfr_neg(r.lo_.get(), x.hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), x.lo_.get(), MPFR_RNDU);
  return r;
}

namespace {

// Hull of op(a, b) over the four corner combinations.
template <typename Op>
RealInterval corner_hull(const RealInterval& x, const RealInterval& y, Op op, RealInterval r) {
  const mpfr_srcptr xs[2] = {x.lo().get(), x.hi().get()};
  const mpfr_srcptr ys[2] = {y.lo().get(), y.hi().get()};
  const Bits prec = r.precision();
  BigFloat lo(prec), hi(prec), tmp(prec);
  bool first = true;
  for (auto a : xs) {
    for (auto b : ys) {
      op(tmp.get(), a, b, MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), lo.get())) mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
      op(tmp.get(), a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), hi.get())) mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return RealInterval::from_bounds(std::move(lo), std::move(hi), prec);
}

}  // namespace

RealInterval operator*(const RealInterval& x, const RealInterval& y) {
  return corner_hull(x, y, mpfr_mul, RealInterval(join(x, y)));
}

RealInterval operator/(const RealInterval& x, const RealInterval& y) {
  if (y.contains_zero()) throw Error("interval division by an interval containing 0");
  return corner_hull(x, y, mpfr_div, RealInterval(join(x, y)));
}

RealInterval log(const RealInterval& x) {
  if (mpfr_sgn(x.lo_.get()) <= 0) throw Error("log of an interval not strictly positive");
  RealInterval r(x.precision_);
  mpfr_log(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval exp(const RealInterval& x) {
  RealInterval r(x.precision_);
  mpfr_exp(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval sqrt(const RealInterval& x) {
  if (mpfr_sgn(x.lo_.get()) < 0) throw Error("sqrt of an interval with negative part");
  RealInterval r(x.precision_);
  mpfr_sqrt(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return r;
}

RealInterval pow(const RealInterval& x, unsigned long n) {
  RealInterval r(x.precision_);
  if (n == 0) return RealInterval::exact(1L, x.precision_);
  const bool even = n % 2 == 0;
  if (!even || mpfr_sgn(x.lo_.get()) >= 0) {
    mpfr_pow_ui(r.lo_.get(), x.lo_.get(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), x.hi_.get(), n, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi_.get()) <= 0) {
    mpfr_pow_ui(r.lo_.get(), x.hi_.get(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), x.lo_.get(), n, MPFR_RNDU);
  } else {
    BigFloat a(x.precision_), b(x.precision_);
    mpfr_pow_ui(a.get(), x.lo_.get(), n, MPFR_RNDU);
    mpfr_pow_ui(b.get(), x.hi_.get(), n, MPFR_RNDU);
    mpfr_set_zero(r.lo_.get(), 1);
    mpfr_max(r.hi_.get(), a.get(), b.get(), MPFR_RNDU);
  }
  return r;
}

}  // namespace majorder

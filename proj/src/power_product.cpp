#include "majorder/power_product.hpp"

#include <algorithm>
#include <cmath>

#include "majorder/errors.hpp"

namespace majorder {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return o;
}

const char* to_string(CompareMethod m) {
  switch (m) {
    case CompareMethod::Structural: return "structural";
    case CompareMethod::ExponentClearing: return "exponent-clearing";
    case CompareMethod::Interval: return "interval";
  }
  return "?";
}

// --- construction ----------------------------------------------------------

PowerProduct PowerProduct::from_factors(std::vector<Factor> factors) {
  for (auto& f : factors) {
    if (f.base < 1) throw Error("power-product base must be >= 1");
    f.exponent.canonicalize();
  }
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.base < b.base; });
  PowerProduct out;
  for (auto& f : factors) {
    if (f.base == 1 || f.exponent == 0) continue;
    if (!out.factors_.empty() && out.factors_.back().base == f.base) {
      out.factors_.back().exponent += f.exponent;
      if (out.factors_.back().exponent == 0) out.factors_.pop_back();
    } else {
      out.factors_.push_back(std::move(f));
    }
  }
  return out;
}

PowerProduct PowerProduct::integer(const BigNat& n) {
  if (n < 1) throw Error("power-product integer must be >= 1");
  auto [primes, rest] = trial_factor(n);
  std::vector<Factor> factors;
  factors.reserve(primes.size() + 1);
  for (auto& [p, e] : primes) factors.push_back({p, BigRat(static_cast<unsigned long>(e))});
  if (rest > 1) factors.push_back({rest, BigRat(1)});
  return from_factors(std::move(factors));
}

PowerProduct PowerProduct::rational(const BigRat& q) {
  if (q <= 0) throw Error("power-product rational must be > 0");
  return integer(BigNat(q.get_num())) / integer(BigNat(q.get_den()));
}

PowerProduct PowerProduct::factorial(std::uint64_t n) {
  std::vector<Factor> factors;
  for (auto [p, e] : factorial_factorization(n)) {
    factors.push_back({BigNat(static_cast<unsigned long>(p)), BigRat(static_cast<unsigned long>(e))});
  }
  return from_factors(std::move(factors));
}

PowerProduct PowerProduct::pow(const BigRat& e) const {
  if (e == 0) return {};
  PowerProduct out(*this);
  for (auto& f : out.factors_) {
    f.exponent *= e;
    f.exponent.canonicalize();
  }
  return out;
}

std::string PowerProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    out += f.base.get_str();
    if (f.exponent == 1) continue;
    if (f.exponent.get_den() == 1 && f.exponent > 0) {
      out += "^" + f.exponent.get_str();
    } else {
      out += "^(" + f.exponent.get_str() + ")";
    }
  }
  return out;
}

namespace {

PowerProduct merge(const PowerProduct& x, const PowerProduct& y, int sign) {
  std::vector<PowerProduct::Factor> all(x.factors());
  all.reserve(x.factors().size() + y.factors().size());
  for (const auto& f : y.factors()) {
    all.push_back({f.base, sign > 0 ? f.exponent : BigRat(-f.exponent)});
  }
  return PowerProduct::from_factors(std::move(all));
}

}  // namespace

PowerProduct operator*(const PowerProduct& x, const PowerProduct& y) { return merge(x, y, 1); }
PowerProduct operator/(const PowerProduct& x, const PowerProduct& y) { return merge(x, y, -1); }

PowerProduct pp_mul(const PowerProduct& x, const PowerProduct& y) { return x * y; }

// --- comparison ------------------------------------------------------------

namespace {

BigNat exponent_lcm(const PowerProduct& x) {
  BigNat l = 1;
  for (const auto& f : x.factors()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.exponent.get_den_mpz_t());
  return l;
}

// ln(x) enclosure at `bits` working precision.
RealInterval log_sum(const PowerProduct& x, mpfr_prec_t bits) {
  RealInterval s(bits);
  for (const auto& f : x.factors()) {
    s = s + RealInterval::exact(f.exponent, bits) * log(RealInterval::exact(f.base, bits));
  }
  return s;
}

}  // namespace

std::uint64_t clearing_cost_bits(const PowerProduct& quotient) {
  const BigNat l = exponent_lcm(quotient);
  BigNat cost = 0;
  for (const auto& f : quotient.factors()) {
    BigNat k = abs(f.exponent.get_num()) * (l / f.exponent.get_den());
    cost += k * static_cast<unsigned long>(mpz_sizeinbase(f.base.get_mpz_t(), 2));
  }
  return cost.fits_ulong_p() ? cost.get_ui() : UINT64_MAX;
}

ComparisonOutcome pp_compare_detailed(const PowerProduct& x, const PowerProduct& y,
                                      const Config& config) {
  const PowerProduct z = x / y;
  if (z.is_one()) return {Ordering::Equal, CompareMethod::Structural};

  if (clearing_cost_bits(z) <= config.blowup_cap_bits) {
    // x/y = prod b^(p/q); raise to L and split by exponent sign.
    const BigNat l = exponent_lcm(z);
    BigNat lhs = 1, rhs = 1, t;
    for (const auto& f : z.factors()) {
      BigNat k = f.exponent.get_num() * (l / f.exponent.get_den());
      const bool positive = k > 0;
      mpz_pow_ui(t.get_mpz_t(), f.base.get_mpz_t(), BigNat(abs(k)).get_ui());
      (positive ? lhs : rhs) *= t;
    }
    const int c = cmp(lhs, rhs);
    return {c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal),
            CompareMethod::ExponentClearing};
  }

  for (mpfr_prec_t bits = config.escalation.start_bits; bits <= config.escalation.max_bits;
       bits *= 2) {
    const int sign = log_sum(z, bits).certain_sign();
    if (sign != 0) {
      return {sign < 0 ? Ordering::Less : Ordering::Greater, CompareMethod::Interval, bits};
    }
  }
  throw Unresolved("power-product comparison " + x.to_string() + " vs " + y.to_string());
}

Ordering pp_compare(const PowerProduct& x, const PowerProduct& y, const Config& config) {
  return pp_compare_detailed(x, y, config).order;
}

// --- evaluation ------------------------------------------------------------

std::optional<BigRat> pp_exact_rational(const PowerProduct& x, std::uint64_t cap_bits) {
  for (const auto& f : x.factors()) {
    if (f.exponent.get_den() != 1) return std::nullopt;
  }
  if (clearing_cost_bits(x) > cap_bits) return std::nullopt;
  BigNat num = 1, den = 1, t;
  for (const auto& f : x.factors()) {
    mpz_pow_ui(t.get_mpz_t(), f.base.get_mpz_t(), BigNat(abs(f.exponent.get_num())).get_ui());
    (f.exponent > 0 ? num : den) *= t;
  }
  return make_rat(num, den);
}

RealInterval pp_log_interval(const PowerProduct& x, mpfr_prec_t precision) {
  return log_sum(x, precision);
}

RealInterval pp_interval_eval(const PowerProduct& x, mpfr_prec_t precision) {
  if (precision < 32) throw PreconditionUnmet("pp_interval_eval needs precision >= 32");
  if (x.is_one()) return RealInterval::exact(1L, precision);

  if (auto v = pp_exact_rational(x, 4 * static_cast<std::uint64_t>(precision))) {
    return RealInterval::exact(*v, precision);
  }

  // exp(sum e_i ln b_i); extra bits cover the magnitude of the exponent sum.
  double magnitude = 1.0;
  for (const auto& f : x.factors()) {
    magnitude += std::fabs(f.exponent.get_d()) * static_cast<double>(mpz_sizeinbase(f.base.get_mpz_t(), 2));
  }
  const auto extra = static_cast<mpfr_prec_t>(std::ceil(std::log2(magnitude)));
  const mpfr_prec_t bits = precision + default_config().guard_bits + extra;
  return exp(log_sum(x, bits));
}

}  // namespace majorder

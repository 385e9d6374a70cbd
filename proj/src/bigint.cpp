#include "majorder/bigint.hpp"

#include "majorder/errors.hpp"

namespace majorder {

BigNat factorial(std::uint64_t n) {
  BigNat out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigRat make_rat(const BigNat& p, const BigNat& q) {
  if (q == 0) throw Error("zero denominator");
  BigRat r(p, q);
  r.canonicalize();
  return r;
}

BigRat parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigNat p, q;
    if (p.set_str(text.substr(0, slash), 10) != 0 || q.set_str(text.substr(slash + 1), 10) != 0) {
      throw Error("malformed rational '" + text + "'");
    }
    return make_rat(p, q);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigNat p;
    if (digits.empty() || digits == "-" || p.set_str(digits, 10) != 0) {
      throw Error("malformed decimal '" + text + "'");
    }
    BigNat q;
    mpz_ui_pow_ui(q.get_mpz_t(), 10, text.size() - dot - 1);
    return make_rat(p, q);
  }
  BigNat p;
  if (p.set_str(text, 10) != 0) throw Error("malformed integer '" + text + "'");
  return BigRat(p);
}

std::string to_string(const BigNat& n) { return n.get_str(); }

std::string to_string(const BigRat& q) { return q.get_str(); }

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorial_factorization(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p : primes_up_to(n)) {
    std::uint64_t e = 0;
    for (std::uint64_t m = n; m > 0;) {
      m /= p;
      e += m;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::pair<std::vector<std::pair<BigNat, std::uint64_t>>, BigNat> trial_factor(
    const BigNat& n, std::uint64_t trial_bound) {
  std::vector<std::pair<BigNat, std::uint64_t>> factors;
  BigNat rest = n;
  if (rest <= 1) return {factors, rest};
  static const std::vector<std::uint64_t> kSmallPrimes = primes_up_to(1000);
  const auto primes = trial_bound <= 1000 ? kSmallPrimes : primes_up_to(trial_bound);
  for (std::uint64_t p : primes) {
    if (p > trial_bound || rest == 1) break;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) factors.emplace_back(BigNat(static_cast<unsigned long>(p)), e);
  }
  return {factors, rest};
}

}  // namespace majorder

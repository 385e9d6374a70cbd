#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace majorder {

/// Arbitrary-precision non-negative integer.
using BigNat = mpz_class;
/// Arbitrary-precision rational, always kept in lowest terms.
using BigRat = mpq_class;

BigNat factorial(std::uint64_t n);

/// Builds p/q in lowest terms. Throws Error when q == 0.
BigRat make_rat(const BigNat& p, const BigNat& q);
BigRat parse_rational(const std::string& text);  // "3/2", "1.0001", "7"

std::string to_string(const BigNat& n);
std::string to_string(const BigRat& q);

/// Prime factorization of n! via Legendre's formula, primes ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorial_factorization(std::uint64_t n);

/// Strips every prime factor below `trial_bound`; returns (prime, exponent)
/// pairs ascending plus the leftover cofactor (1 if fully factored).
std::pair<std::vector<std::pair<BigNat, std::uint64_t>>, BigNat> trial_factor(
    const BigNat& n, std::uint64_t trial_bound = 1000);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace majorder

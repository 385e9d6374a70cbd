#include <doctest.h>

#include <functional>
#include <set>

#include "majorder/errors.hpp"
#include "majorder/recur.hpp"
#include "oracles.hpp"

using namespace majorder;

namespace {

std::vector<BigNat> nats(std::initializer_list<long> xs) {
  std::vector<BigNat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Strictly decreasing tuples over [1, max_index] of length <= len, by recursion.
std::vector<oracle::Seq> tuples_oracle(std::uint32_t max_index, std::uint32_t len) {
  std::vector<oracle::Seq> out;
  std::function<void(oracle::Seq&, std::uint32_t)> grow = [&](oracle::Seq& cur, std::uint32_t below) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == len) return;
    for (std::uint32_t i = below; i >= 1; --i) {
      cur.push_back(i);
      grow(cur, i - 1);
      cur.pop_back();
    }
  };
  oracle::Seq cur;
  grow(cur, max_index);
  return out;
}

std::set<std::pair<std::string, std::string>> oracle_violations(const std::vector<BigNat>& terms,
                                                               std::uint32_t max_index, std::uint32_t len) {
  const auto items = tuples_oracle(max_index, len);
  std::vector<mpz_class> keys;
  for (const auto& t : items) {
    mpz_class p = 1;
    for (auto i : t) p *= terms[i];
    keys.push_back(p);
  }
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [i, j] : oracle::equal_key_pairs(items, keys)) {
    if (i != j) out.insert({oracle::show(items[i]), oracle::show(items[j])});
  }
  return out;
}

std::set<std::pair<std::string, std::string>> as_strings(const UniquenessReport& r) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : r.violations) out.insert({a.to_string(), b.to_string()});
  return out;
}

}  // namespace

TEST_CASE("fibonacci with F0 = F1 = 1") {
  CHECK(fib(0) == 1);
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 2);
  CHECK(fib(10) == 89);
  const FibSeq f(300);
  CHECK(f.size() == 301);
  for (std::uint64_t n = 2; n <= 300; ++n) CHECK(f[n] == f[n - 1] + f[n - 2]);
  for (std::uint64_t n : {0u, 1u, 17u, 100u, 300u}) {
    CHECK(f[n] == oracle::fib_shifted(n));
    CHECK(fib(n) == f[n]);
  }
  for (std::uint64_t n = 3; n <= 300; ++n) CHECK(f[n] > f[n - 1]);
}

TEST_CASE("recurrence terms") {
  CHECK(recurrence_terms({3, -1, 3}, 4) == nats({1, 3, 8, 21, 55}));
  CHECK(RecurrenceSpec{3, -1, 3}.to_string() == "a=3,b=-1,A1=3");
  CHECK(RecurrenceSpec{3, -1, 3}.q_at_a1() == 1);
  // A(n) = n + 1
  CHECK(recurrence_terms({2, -1, 2}, 5) == nats({1, 2, 3, 4, 5, 6}));
  // Odd-index Fibonacci numbers; the even-index ones have A1 = 2 and q(A1) = -1.
  const auto odd = recurrence_terms({3, -1, 3}, 20);
  for (std::uint64_t n = 0; n <= 20; ++n) CHECK(odd[n] == oracle::fib_shifted(2 * n + 1));
  CHECK_THROWS_AS(recurrence_terms({3, -1, 2}, 20), HypothesisViolated);

  try {
    recurrence_terms({1, -1, 1}, 10);
    FAIL("expected NegativeTerm");
  } catch (const NegativeTerm& e) {
    CHECK(e.index() == 3);
  }
  CHECK_THROWS_AS(recurrence_terms({0, -1, 3}, 5), HypothesisViolated);
  CHECK_THROWS_AS(recurrence_terms({3, 1, 3}, 5), HypothesisViolated);
  CHECK_THROWS_AS(recurrence_terms({3, -1, 1}, 5), HypothesisViolated);
}

TEST_CASE("ratio monotonicity") {
  const auto even = fib_even_source(30);
  CHECK(ratio_monotone_check(even.terms) == RatioDirection::Increasing);
  const auto odd = fib_odd_source(30);
  CHECK(ratio_monotone_check(odd.terms) == RatioDirection::Decreasing);
  CHECK_THROWS_AS(ratio_monotone_check(odd.terms, RatioDirection::Increasing), NotMonotone);
  // Plain Fibonacci ratios oscillate: 1, 2, 3/2, 5/3, ...
  try {
    ratio_monotone_check(FibSeq(10).terms());
    FAIL("expected NotMonotone");
  } catch (const NotMonotone& e) {
    CHECK(e.at() == 2);
  }
  // Geometric terms tie at once.
  CHECK_THROWS_AS(ratio_monotone_check(nats({1, 2, 4, 8})), NotMonotone);
}

TEST_CASE("odd-index cross products differ by one") {
  // F(2n+3) F(2n-1) - F(2n+1)^2 with F0 = F1 = 1 is always -1.
  const FibSeq f(401);
  for (std::uint64_t n = 1; n <= 199; ++n) {
    CHECK(f[2 * n + 3] * f[2 * n - 1] - f[2 * n + 1] * f[2 * n + 1] == -1);
    CHECK(f[2 * n + 2] * f[2 * n - 2] - f[2 * n] * f[2 * n] == 1);
  }
}

TEST_CASE("index tuples") {
  std::vector<std::string> names;
  for (const auto& t : index_tuples(3, 2)) names.push_back(t.to_string());
  CHECK(names == std::vector<std::string>{"(3)", "(2)", "(1)", "(3,2)", "(3,1)", "(2,1)"});
  for (std::uint32_t m : {1u, 5u, 10u}) {
    for (std::uint32_t len : {1u, 3u, 4u}) CHECK(index_tuples(m, len).size() == tuples_oracle(m, len).size());
  }
}

TEST_CASE("uniqueness agrees with the grouping oracle") {
  const auto even = fib_even_source(10);
  const auto e = uniqueness_check(even, 10, 3);
  CHECK(e.holds());
  CHECK(e.tuples == 10 + 45 + 120);
  CHECK(as_strings(e) == oracle_violations(even.terms, 10, 3));

  const auto odd = fib_odd_source(10);
  CHECK(uniqueness_check(odd, 10, 3).holds());

  // A(n) = n + 1 has genuine collisions such as A5 = A2 * A1.
  const auto lin = recurrence_source({2, -1, 2}, 8);
  const auto r = uniqueness_check(lin, 8, 3);
  CHECK_FALSE(r.holds());
  CHECK(as_strings(r) == oracle_violations(lin.terms, 8, 3));
  CHECK(as_strings(r).count({"(5)", "(2,1)"}) == 1);

  for (const RecurrenceSpec& spec :
       {RecurrenceSpec{3, -1, 3}, RecurrenceSpec{4, -1, 4}, RecurrenceSpec{5, -2, 5}, RecurrenceSpec{2, -1, 3}}) {
    const auto src = recurrence_source(spec, 8);
    CHECK_MESSAGE(as_strings(uniqueness_check(src, 8, 3)) == oracle_violations(src.terms, 8, 3), spec.to_string());
  }
  CHECK_THROWS_AS(uniqueness_check(even, 11, 3), PreconditionUnmet);
}

TEST_CASE("binet enclosures") {
  CHECK(binet_enclosure_check(30, 128));
  CHECK(binet_enclosure_check(100, 256));
  CHECK(binet_interval(10, 128).contains(BigNat(89)));
  CHECK(binet_interval(200, 128).log2_relative_width() < -100);
}

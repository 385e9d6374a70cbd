#include <doctest.h>

#include "majorder/errors.hpp"
#include "majorder/monotone.hpp"
#include "oracles.hpp"

using namespace majorder;

namespace {

CanonicalSeq seq(std::initializer_list<std::int64_t> xs) { return CanonicalSeq::canonicalize(xs); }

struct Sweep {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::size_t equal_sum_violations = 0;
};

Sweep product_sweep(const BuiltinF& f, std::uint32_t max_sum, const MonotoneCertificate& cert) {
  Sweep out;
  const auto table = f.table(max_sum);
  for (const auto& [a, b] : comparable_pairs(max_sum)) {
    ++out.pairs;
    try {
      verify_product_inequality(table, a, b, cert);
    } catch (const TheoremViolation&) {
      ++out.violations;
      if (a.sum() == b.sum()) ++out.equal_sum_violations;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("builtin function values") {
  CHECK(BuiltinF::of(FunctionTag::Factorial)(5) == PowerProduct::integer(120));
  CHECK(BuiltinF::of(FunctionTag::RatioRoot)(1) == PowerProduct::rational(BigRat(3, 2)));
  CHECK(BuiltinF::of(FunctionTag::RatioRootPower)(1) == PowerProduct::integer(2));
  CHECK(BuiltinF::of(FunctionTag::FibEvenIndex)(3) == PowerProduct::integer(13));
  CHECK(BuiltinF::of(FunctionTag::FibOddIndex)(3) == PowerProduct::integer(21));
  CHECK(BuiltinF::parse("fact-over-self-power").tag() == FunctionTag::FactOverSelfPower);
  CHECK_THROWS_AS(BuiltinF::parse("nope"), Error);
  for (FunctionTag t : catalog_tags()) CHECK(BuiltinF::parse(to_string(t)).tag() == t);
  // x!/x^x at 3 is 6/27.
  CHECK(BuiltinF::of(FunctionTag::FactOverSelfPower)(3) == PowerProduct::rational(BigRat(2, 9)));
}

TEST_CASE("ratio profiles") {
  const auto fact = ratio_profile(BuiltinF::of(FunctionTag::Factorial), 50);
  CHECK(fact.kind == CertificateKind::RatioIncreasing);
  CHECK(fact.x_max == 50);
  CHECK(fact.witness_checked == 50);
  CHECK(ratio_profile(BuiltinF::of(FunctionTag::FactOverSelfPower), 50).kind == CertificateKind::RatioDecreasing);
  CHECK(ratio_profile(BuiltinF::of(FunctionTag::FibEvenIndex), 50).kind == CertificateKind::RatioIncreasing);
  CHECK(ratio_profile(BuiltinF::of(FunctionTag::FibOddIndex), 50).kind == CertificateKind::RatioDecreasing);
  CHECK(ratio_profile(BuiltinF::of(FunctionTag::RatioRoot), 50).kind == CertificateKind::RatioDecreasing);
  CHECK(ratio_profile(BuiltinF::of(FunctionTag::RatioRootPower), 50).kind == CertificateKind::RatioIncreasing);
  CHECK_THROWS_AS(ratio_profile(BuiltinF::of(FunctionTag::F2), 10), F0NotOne);
  CHECK_THROWS_AS(ratio_profile(BuiltinF::of(FunctionTag::Factorial), 1), PreconditionUnmet);
}

TEST_CASE("ratio profile detects a flat or flipping ratio") {
  const auto geometric = BuiltinF::custom("pow2", [](std::uint64_t x) {
    return PowerProduct::integer(2).pow(BigRat(static_cast<unsigned long>(x)));
  });
  try {
    ratio_profile(geometric, 10);
    FAIL("expected NotMonotone");
  } catch (const NotMonotone& e) {
    CHECK(e.at() == 1);
  }
  // Ratios 2, 3, 2: increasing then decreasing.
  const auto zigzag = BuiltinF::custom("zigzag", [](std::uint64_t x) {
    const unsigned long v[] = {1, 2, 6, 12, 24};
    return PowerProduct::integer(v[x]);
  });
  try {
    ratio_profile(zigzag, 4);
    FAIL("expected NotMonotone");
  } catch (const NotMonotone& e) {
    CHECK(e.at() == 2);
  }
}

TEST_CASE("ratio profile is deterministic") {
  const auto f = BuiltinF::of(FunctionTag::RatioRootPower);
  CHECK(ratio_profile(f, 40) == ratio_profile(f, 40));
}

TEST_CASE("difference profiles") {
  const auto f1 = diff_profile(BuiltinF::of(FunctionTag::F1), 30, 128);
  CHECK(f1.kind == CertificateKind::DiffIncreasing);
  CHECK(f1.max_precision_used >= 128);
  const auto f2 = diff_profile(BuiltinF::of(FunctionTag::F2), 30, 128);
  CHECK(f2.kind == CertificateKind::DiffDecreasing);
  CHECK(diff_profile(BuiltinF::of(FunctionTag::F1), 30, 128) == f1);

  const auto linear = BuiltinF::custom("x+1", [](std::uint64_t x) { return PowerProduct::integer(x + 1); });
  CHECK_THROWS_AS(diff_profile(linear, 10, 128), NotMonotone);
  const auto square = BuiltinF::custom("x^2+1", [](std::uint64_t x) { return PowerProduct::integer(x * x + 1); });
  CHECK(diff_profile(square, 10, 128).kind == CertificateKind::DiffIncreasing);
}

TEST_CASE("product inequality examples") {
  const auto fact = BuiltinF::of(FunctionTag::Factorial);
  const auto cf = ratio_profile(fact, 20);
  CHECK(verify_product_inequality(fact, seq({3, 1}), seq({2, 2}), cf) == InequalityOutcome::StrictlyGreater);
  CHECK(verify_product_inequality(fact, seq({3, 1}), seq({3, 1}), cf) == InequalityOutcome::Equal);
  CHECK(verify_product_inequality(fact, seq({4}), seq({2, 1, 1}), cf) == InequalityOutcome::StrictlyGreater);

  const auto fsp = BuiltinF::of(FunctionTag::FactOverSelfPower);
  const auto cs = ratio_profile(fsp, 20);
  CHECK(verify_product_inequality(fsp, seq({3, 1}), seq({2, 2}), cs) == InequalityOutcome::StrictlyLess);
  CHECK(verify_product_inequality(fsp, seq({5}), seq({4}), cs) == InequalityOutcome::StrictlyLess);

  CHECK_THROWS_AS(verify_product_inequality(fact, seq({2, 2}), seq({3, 1}), cf), PreconditionUnmet);
  CHECK_THROWS_AS(verify_product_inequality(fact, seq({30}), seq({29, 1}), cf), PreconditionUnmet);
  const auto f1cert = diff_profile(BuiltinF::of(FunctionTag::F1), 10, 128);
  CHECK_THROWS_AS(verify_product_inequality(fact, seq({3}), seq({2}), f1cert), PreconditionUnmet);
}

TEST_CASE("product inequality against exact integer products") {
  // For x! the products are integers; compare with plain big-integer products.
  const auto fact = BuiltinF::of(FunctionTag::Factorial);
  const auto cert = ratio_profile(fact, 9);
  for (const auto& [a, b] : comparable_pairs(9)) {
    mpz_class pa = 1, pb = 1;
    for (Part x : a.parts()) pa *= oracle::fact(x);
    for (Part x : b.parts()) pb *= oracle::fact(x);
    const auto got = verify_product_inequality(fact, a, b, cert);
    if (pa > pb) CHECK(got == InequalityOutcome::StrictlyGreater);
    else if (pa < pb) CHECK(got == InequalityOutcome::StrictlyLess);
    else CHECK(got == InequalityOutcome::Equal);
    CHECK((pa == pb) == (a == b));
  }
}

TEST_CASE("increasing ratio functions satisfy the product inequality everywhere") {
  for (FunctionTag t : {FunctionTag::Factorial, FunctionTag::FibEvenIndex, FunctionTag::RatioRootPower}) {
    const auto f = BuiltinF::of(t);
    const auto cert = ratio_profile(f, 10);
    REQUIRE(cert.increasing());
    const auto s = product_sweep(f, 10, cert);
    CHECK(s.pairs > 0);
    CHECK_MESSAGE(s.violations == 0, to_string(t));
  }
}

TEST_CASE("decreasing ratio functions hold on equal-sum pairs") {
  for (FunctionTag t : {FunctionTag::FactOverSelfPower, FunctionTag::RatioRoot, FunctionTag::FibOddIndex}) {
    const auto f = BuiltinF::of(t);
    const auto cert = ratio_profile(f, 10);
    REQUIRE_FALSE(cert.increasing());
    CHECK_MESSAGE(product_sweep(f, 10, cert).equal_sum_violations == 0, to_string(t));
  }
  // x!/x^x never exceeds 1, so dropping parts can only help it.
  const auto fsp = BuiltinF::of(FunctionTag::FactOverSelfPower);
  CHECK(product_sweep(fsp, 10, ratio_profile(fsp, 10)).violations == 0);
}

TEST_CASE("decreasing ratio functions with f(1) > 1 break on unequal sums") {
  const auto rr = BuiltinF::of(FunctionTag::RatioRoot);
  const auto cert = ratio_profile(rr, 10);
  CHECK_THROWS_AS(verify_product_inequality(rr, seq({2}), seq({1}), cert), TheoremViolation);
  // (3,3) and (2,1,1) have the same value 9/2.
  CHECK(pp_compare(rr(3) * rr(3), rr(2) * rr(1) * rr(1)) == Ordering::Equal);
  CHECK_THROWS_AS(verify_product_inequality(rr, seq({3, 3}), seq({2, 1, 1}), cert), TheoremViolation);

  const auto fo = BuiltinF::of(FunctionTag::FibOddIndex);
  CHECK_THROWS_AS(verify_product_inequality(fo, seq({2}), seq({1}), ratio_profile(fo, 10)), TheoremViolation);
}

TEST_CASE("sum inequality") {
  const auto f1 = BuiltinF::of(FunctionTag::F1);
  const auto c1 = diff_profile(f1, 12, 128);
  CHECK(verify_sum_inequality(f1, seq({3, 1}), seq({2, 2}), c1, 128) == InequalityOutcome::StrictlyGreater);
  CHECK(verify_sum_inequality(f1, seq({4}), seq({1, 1, 1, 1}), c1, 128) == InequalityOutcome::StrictlyGreater);
  CHECK(verify_sum_inequality(f1, seq({2, 2}), seq({2, 2}), c1, 128) == InequalityOutcome::Equal);
  const auto fact_cert = ratio_profile(BuiltinF::of(FunctionTag::Factorial), 10);
  CHECK_THROWS_AS(verify_sum_inequality(f1, seq({3}), seq({2}), fact_cert, 128), PreconditionUnmet);

  const auto f2 = BuiltinF::of(FunctionTag::F2);
  const auto c2 = diff_profile(f2, 12, 128);
  CHECK(verify_sum_inequality(f2, seq({3, 1}), seq({2, 2}), c2, 128) == InequalityOutcome::StrictlyLess);
  CHECK_THROWS_AS(verify_sum_inequality(f2, seq({2}), seq({1}), c2, 128), TheoremViolation);
}

TEST_CASE("sum inequality sweep for the increasing difference function") {
  const auto f1 = BuiltinF::of(FunctionTag::F1);
  const auto c1 = diff_profile(f1, 10, 128);
  std::size_t n = 0;
  for (const auto& [a, b] : comparable_pairs(10)) {
    const auto got = verify_sum_inequality(f1, a, b, c1, 128);
    CHECK((got == InequalityOutcome::Equal) == (a == b));
    ++n;
  }
  CHECK(n > 0);

  const auto f2 = BuiltinF::of(FunctionTag::F2);
  const auto c2 = diff_profile(f2, 10, 128);
  for (const auto& [a, b] : comparable_pairs(10)) {
    if (a.sum() != b.sum() || a == b) continue;
    CHECK(verify_sum_inequality(f2, a, b, c2, 128) == InequalityOutcome::StrictlyLess);
  }
}

TEST_CASE("sum interval matches a plain floating-point sum") {
  const auto f1 = BuiltinF::of(FunctionTag::F1);
  for (const auto& s : enumerate_sequences(8)) {
    const oracle::Seq plain(s.parts().begin(), s.parts().end());
    mpfr_t ref;
    mpfr_init2(ref, 200);
    oracle::float_sum(ref, plain, 1, 200);
    const RealInterval iv = sum_interval(f1, s, 128);
    CHECK(std::abs(mpfr_get_d(ref, MPFR_RNDN) - iv.midpoint()) < 1e-12 * (1 + std::abs(iv.midpoint())));
    mpfr_clear(ref);
  }
}

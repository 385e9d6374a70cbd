#pragma once

// Catalog of factorial-type Diophantine equations and bounded exhaustive
// solvers for them.
//
// Sequence equations compare a value of a against the same value of b over
// every pair with a majorizing b. Rectangular equations compare the value
// at (k, n) against the value at (n, k) over a square grid.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "majorder/bigint.hpp"
#include "majorder/config.hpp"
#include "majorder/interval.hpp"
#include "majorder/poset.hpp"
#include "majorder/power_product.hpp"

namespace majorder {

enum class EquationId {
  ProdPlus,            // a1!...an! + a1...an
  ProdMinus,           // a1!...an! - a1...an
  PowPlus,             // (k!)^n + k^n            vs (n!)^k + n^k
  PowMinus,            // (k!)^n - k^n            vs (n!)^k - n^k
  FactOverPower,       // prod a_i!/a_i^a_i
  RatioRoot,           // prod a_i/((a_i-1)!)^(1/(a_i-1)), value 3/2 at a_i = 1
  RatioRootPower,      // prod a_i^(a_i+1)/((a_i-1)!)^(1/(a_i-1)), value 2 at a_i = 1
  SumF1,               // sum ((a_i+1)!)^(1/(a_i+2))
  SumF2,               // sum ((a_i+2)!)^(1/(a_i+2))
  RectFactOverPower,   // (k!)^n n^(nk)           vs (n!)^k k^(nk)
  RectRatioRoot,       // (k/((k-1)!)^(1/(k-1)))^n vs the same at (n, k)
  RectRatioRootPower,  // (k^(k+1)/((k-1)!)^(1/(k-1)))^n vs the same at (n, k)
};

enum class EquationShape { Sequence, Rectangular };

struct EquationInfo {
  EquationId id;
  const char* name;  // CLI name, e.g. "prod-plus"
  EquationShape shape;
};

const std::vector<EquationInfo>& equation_catalog();
const EquationInfo& info(EquationId id);
/// Throws Error for an unknown name.
EquationId parse_equation(const std::string& name);
const char* to_string(EquationId id);

/// Value of one side: exact where representable, an enclosure for sums.
using SideValue = std::variant<BigNat, BigRat, PowerProduct, RealInterval>;

std::string to_string(const SideValue& v);

struct RectArgs {
  std::uint32_t k;
  std::uint32_t n;
};

/// Side value of a sequence-shaped equation. `precision` applies to SumF1/SumF2.
SideValue eval_side(EquationId eq, const CanonicalSeq& s, mpfr_prec_t precision = 128);
/// Left side of a rectangular equation at (k, n); the right side is the
/// left side at (n, k).
SideValue eval_side(EquationId eq, RectArgs args);

enum class Classification { Trivial, KnownExceptional, Unexpected };

const char* to_string(Classification c);

struct SolutionRecord {
  EquationId equation;
  CanonicalSeq a;
  CanonicalSeq b;
  Classification classification;
  std::string lhs;
  std::string rhs;
  std::optional<RectArgs> grid;  // set for rectangular equations
};

struct SolveOptions {
  Config config = default_config();
  unsigned threads = 1;
};

struct SolveResult {
  EquationId equation;
  std::uint32_t bound = 0;
  std::uint64_t candidates = 0;  // pairs or grid cells examined
  std::vector<SolutionRecord> records;
  /// Pairs whose enclosures could not be separated (sum equations only).
  std::vector<std::pair<CanonicalSeq, CanonicalSeq>> unresolved;
  /// How the exact comparisons were decided (power-product equations).
  std::uint64_t structural = 0;
  std::uint64_t exponent_clearing = 0;
  std::uint64_t interval_fallback = 0;
  mpfr_prec_t max_precision_used = 0;

  bool has_unexpected() const;
};

SolveResult solve_sequence_equation(EquationId eq, std::uint32_t max_sum,
                                    const SolveOptions& options = {});
SolveResult solve_rectangular(EquationId eq, std::uint32_t n_max, const SolveOptions& options = {});

/// Coprimality step for a majorizing pair a != b whose first difference is
/// at index m with a_m > b_m: gcd(b_m...b_k, (a_1-1)!...(a_n-1)! + 1) == 1.
/// Throws PreconditionUnmet for pairs outside that shape.
bool factorize_check_prodplus(const CanonicalSeq& a, const CanonicalSeq& b);

}  // namespace majorder

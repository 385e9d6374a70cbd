#include "majorder/dioph.hpp"

#include <algorithm>

#include "majorder/errors.hpp"
#include "majorder/monotone.hpp"
#include "majorder/parallel.hpp"

namespace majorder {

const std::vector<EquationInfo>& equation_catalog() {
  static const std::vector<EquationInfo> catalog = {
      {EquationId::ProdPlus, "prod-plus", EquationShape::Sequence},
      {EquationId::ProdMinus, "prod-minus", EquationShape::Sequence},
      {EquationId::PowPlus, "pow-plus", EquationShape::Rectangular},
      {EquationId::PowMinus, "pow-minus", EquationShape::Rectangular},
      {EquationId::FactOverPower, "fact-over-power", EquationShape::Sequence},
      {EquationId::RatioRoot, "ratio-root", EquationShape::Sequence},
      {EquationId::RatioRootPower, "ratio-root-power", EquationShape::Sequence},
      {EquationId::SumF1, "sum-f1", EquationShape::Sequence},
      {EquationId::SumF2, "sum-f2", EquationShape::Sequence},
      {EquationId::RectFactOverPower, "rect-fact-over-power", EquationShape::Rectangular},
      {EquationId::RectRatioRoot, "rect-ratio-root", EquationShape::Rectangular},
      {EquationId::RectRatioRootPower, "rect-ratio-root-power", EquationShape::Rectangular},
  };
  return catalog;
}

const EquationInfo& info(EquationId id) {
  for (const auto& e : equation_catalog()) {
    if (e.id == id) return e;
  }
  throw Error("unknown equation id");
}

EquationId parse_equation(const std::string& name) {
  for (const auto& e : equation_catalog()) {
    if (name == e.name) return e.id;
  }
  throw Error("unknown equation '" + name + "'");
}

const char* to_string(EquationId id) { return info(id).name; }

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Trivial: return "Trivial";
    case Classification::KnownExceptional: return "KnownExceptional";
    case Classification::Unexpected: return "Unexpected";
  }
  return "?";
}

std::string to_string(const SideValue& v) {
  struct Visitor {
    std::string operator()(const BigNat& n) const { return n.get_str(); }
    std::string operator()(const BigRat& q) const { return q.get_str(); }
    std::string operator()(const PowerProduct& p) const { return p.to_string(); }
    std::string operator()(const RealInterval& r) const {
      return "[" + r.lo_decimal() + ", " + r.hi_decimal() + "]@" + std::to_string(r.precision());
    }
  };
  return std::visit(Visitor{}, v);
}

bool SolveResult::has_unexpected() const {
  return std::any_of(records.begin(), records.end(),
                     [](const SolutionRecord& r) { return r.classification == Classification::Unexpected; });
}

// --- evaluators ------------------------------------------------------------

namespace {

BuiltinF function_for(EquationId eq) {
  switch (eq) {
    case EquationId::FactOverPower:
    case EquationId::RectFactOverPower:
      return BuiltinF::of(FunctionTag::FactOverSelfPower);
    case EquationId::RatioRoot:
    case EquationId::RectRatioRoot:
      return BuiltinF::of(FunctionTag::RatioRoot);
    case EquationId::RatioRootPower:
    case EquationId::RectRatioRootPower:
      return BuiltinF::of(FunctionTag::RatioRootPower);
    case EquationId::SumF1:
      return BuiltinF::of(FunctionTag::F1);
    case EquationId::SumF2:
      return BuiltinF::of(FunctionTag::F2);
    default:
      throw Error(std::string("equation ") + to_string(eq) + " has no catalog function");
  }
}

BigNat pow_nat(const BigNat& base, unsigned long e) {
  BigNat out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

void require_shape(EquationId eq, EquationShape shape) {
  if (info(eq).shape != shape) {
    throw PreconditionUnmet(std::string("equation ") + to_string(eq) + " has a different shape");
  }
}

}  // namespace

SideValue eval_side(EquationId eq, const CanonicalSeq& s, mpfr_prec_t precision) {
  require_shape(eq, EquationShape::Sequence);
  switch (eq) {
    case EquationId::ProdPlus:
    case EquationId::ProdMinus: {
      BigNat facts = 1, plain = 1;
      for (Part x : s.parts()) {
        facts *= factorial(x);
        plain *= static_cast<unsigned long>(x);
      }
      return eq == EquationId::ProdPlus ? BigNat(facts + plain) : BigNat(facts - plain);
    }
    case EquationId::SumF1:
    case EquationId::SumF2:
      return sum_interval(function_for(eq), s, precision);
    default: {
      const BuiltinF f = function_for(eq);
      PowerProduct p;
      for (Part x : s.parts()) p = p * f(x);
      return p;
    }
  }
}

SideValue eval_side(EquationId eq, RectArgs args) {
  require_shape(eq, EquationShape::Rectangular);
  if (args.k < 1 || args.n < 1) throw PreconditionUnmet("rectangular arguments must be >= 1");
  const unsigned long k = args.k, n = args.n;
  switch (eq) {
    case EquationId::PowPlus:
      return BigNat(pow_nat(factorial(k), n) + pow_nat(BigNat(k), n));
    case EquationId::PowMinus:
      return BigNat(pow_nat(factorial(k), n) - pow_nat(BigNat(k), n));
    case EquationId::RectFactOverPower:
      return BigNat(pow_nat(factorial(k), n) * pow_nat(BigNat(n), n * k));
    default:
      return function_for(eq)(k).pow(BigRat(n));
  }
}

// --- solvers ---------------------------------------------------------------

namespace {

bool all_parts_one_or_two(const CanonicalSeq& s) {
  return std::all_of(s.parts().begin(), s.parts().end(), [](Part p) { return p <= 2; });
}

Classification classify(EquationId eq, const CanonicalSeq& a, const CanonicalSeq& b,
                        std::optional<RectArgs> grid) {
  if (a == b) return Classification::Trivial;
  if (eq == EquationId::ProdMinus && all_parts_one_or_two(a) && all_parts_one_or_two(b)) {
    return Classification::KnownExceptional;
  }
  if (eq == EquationId::PowMinus && grid &&
      ((grid->k == 1 && grid->n == 2) || (grid->k == 2 && grid->n == 1))) {
    return Classification::KnownExceptional;
  }
  return Classification::Unexpected;
}

struct ChunkResult {
  std::vector<SolutionRecord> records;
  std::vector<std::pair<CanonicalSeq, CanonicalSeq>> unresolved;
  std::uint64_t structural = 0, clearing = 0, interval = 0;
  mpfr_prec_t max_bits = 0;
};

void merge_into(SolveResult& out, std::vector<ChunkResult>& chunks) {
  for (auto& c : chunks) {
    for (auto& r : c.records) out.records.push_back(std::move(r));
    for (auto& u : c.unresolved) out.unresolved.push_back(std::move(u));
    out.structural += c.structural;
    out.exponent_clearing += c.clearing;
    out.interval_fallback += c.interval;
    out.max_precision_used = std::max(out.max_precision_used, c.max_bits);
  }
}

}  // namespace

SolveResult solve_sequence_equation(EquationId eq, std::uint32_t max_sum, const SolveOptions& options) {
  require_shape(eq, EquationShape::Sequence);
  if (max_sum < 1) throw PreconditionUnmet("max_sum must be >= 1");
  const Config& config = options.config;
  const auto universe = enumerate_sequences(max_sum);
  const auto pairs = comparable_index_pairs(universe);
  const bool is_sum = eq == EquationId::SumF1 || eq == EquationId::SumF2;
  const mpfr_prec_t start = config.escalation.start_bits;

  std::vector<SideValue> values;
  values.reserve(universe.size());
  for (const auto& s : universe) values.push_back(eval_side(eq, s, start));

  SolveResult result;
  result.equation = eq;
  result.bound = max_sum;
  result.candidates = pairs.size();

  std::vector<ChunkResult> chunks(std::max(1u, options.threads));
  parallel_chunks(pairs.size(), options.threads, [&](std::size_t begin, std::size_t end, unsigned c) {
    ChunkResult& out = chunks[c];
    for (std::size_t p = begin; p < end; ++p) {
      const auto [i, j] = pairs[p];
      const CanonicalSeq& a = universe[i];
      const CanonicalSeq& b = universe[j];
      bool equal = false;
      if (is_sum) {
        // Equality is declared only for identical sequences; distinct pairs
        // must separate.
        if (i == j) {
          equal = true;
        } else {
          bool separated = false;
          for (mpfr_prec_t bits = start; bits <= config.escalation.max_bits; bits *= 2) {
            const auto& ra = bits == start ? std::get<RealInterval>(values[i])
                                           : std::get<RealInterval>(eval_side(eq, a, bits));
            const auto& rb = bits == start ? std::get<RealInterval>(values[j])
                                           : std::get<RealInterval>(eval_side(eq, b, bits));
            if (ra.certainly_less(rb) || rb.certainly_less(ra)) {
              separated = true;
              out.max_bits = std::max(out.max_bits, bits);
              break;
            }
          }
          if (!separated) out.unresolved.emplace_back(a, b);
        }
      } else if (std::holds_alternative<BigNat>(values[i])) {
        equal = std::get<BigNat>(values[i]) == std::get<BigNat>(values[j]);
      } else {
        const auto o = pp_compare_detailed(std::get<PowerProduct>(values[i]),
                                           std::get<PowerProduct>(values[j]), config);
        switch (o.method) {
          case CompareMethod::Structural: ++out.structural; break;
          case CompareMethod::ExponentClearing: ++out.clearing; break;
          case CompareMethod::Interval:
            ++out.interval;
            out.max_bits = std::max(out.max_bits, o.precision);
            break;
        }
        equal = o.order == Ordering::Equal;
      }
      if (equal) {
        out.records.push_back({eq, a, b, classify(eq, a, b, std::nullopt), to_string(values[i]),
                               to_string(values[j]), std::nullopt});
      }
    }
  });
  merge_into(result, chunks);
  return result;
}

SolveResult solve_rectangular(EquationId eq, std::uint32_t n_max, const SolveOptions& options) {
  require_shape(eq, EquationShape::Rectangular);
  if (n_max < 1) throw PreconditionUnmet("n_max must be >= 1");

  std::vector<SideValue> values;  // values[(k-1) * n_max + (n-1)] = left side at (k, n)
  for (std::uint32_t k = 1; k <= n_max; ++k) {
    for (std::uint32_t n = 1; n <= n_max; ++n) values.push_back(eval_side(eq, RectArgs{k, n}));
  }
  auto at = [&](std::uint32_t k, std::uint32_t n) -> const SideValue& {
    return values[(k - 1) * static_cast<std::size_t>(n_max) + (n - 1)];
  };

  SolveResult result;
  result.equation = eq;
  result.bound = n_max;
  result.candidates = static_cast<std::uint64_t>(n_max) * n_max;

  std::vector<ChunkResult> chunks(std::max(1u, options.threads));
  parallel_chunks(result.candidates, options.threads, [&](std::size_t begin, std::size_t end, unsigned c) {
    ChunkResult& out = chunks[c];
    for (std::size_t cell = begin; cell < end; ++cell) {
      const auto k = static_cast<std::uint32_t>(cell / n_max + 1);
      const auto n = static_cast<std::uint32_t>(cell % n_max + 1);
      const SideValue& lhs = at(k, n);
      const SideValue& rhs = at(n, k);
      bool equal = false;
      if (std::holds_alternative<BigNat>(lhs)) {
        equal = std::get<BigNat>(lhs) == std::get<BigNat>(rhs);
      } else {
        const auto o = pp_compare_detailed(std::get<PowerProduct>(lhs), std::get<PowerProduct>(rhs),
                                           options.config);
        switch (o.method) {
          case CompareMethod::Structural: ++out.structural; break;
          case CompareMethod::ExponentClearing: ++out.clearing; break;
          case CompareMethod::Interval: ++out.interval; break;
        }
        equal = o.order == Ordering::Equal;
      }
      if (equal) {
        const RectArgs grid{k, n};
        const CanonicalSeq a = rectangle(k, n);
        const CanonicalSeq b = rectangle(n, k);
        out.records.push_back({eq, a, b, classify(eq, a, b, grid), to_string(lhs), to_string(rhs), grid});
      }
    }
  });
  merge_into(result, chunks);
  return result;
}

bool factorize_check_prodplus(const CanonicalSeq& a, const CanonicalSeq& b) {
  if (a == b) throw PreconditionUnmet("pair must be distinct");
  if (!majorizes(a, b)) throw PreconditionUnmet(a.to_string() + " does not majorize " + b.to_string());
  std::size_t m = 0;
  while (m < a.size() && a[m] == b[m]) ++m;
  if (m == a.size() || a[m] <= b[m]) {
    throw PreconditionUnmet("first difference must have a_m > b_m");
  }
  BigNat tail = 1;
  for (std::size_t j = m; j < b.size(); ++j) tail *= static_cast<unsigned long>(b[j]);
  BigNat shifted = 1;
  for (Part x : a.parts()) shifted *= factorial(x - 1);
  shifted += 1;
  BigNat g;
  mpz_gcd(g.get_mpz_t(), tail.get_mpz_t(), shifted.get_mpz_t());
  return g == 1;
}

}  // namespace majorder

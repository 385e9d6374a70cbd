#include "commands.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "majorder/dioph.hpp"
#include "majorder/gamma.hpp"
#include "majorder/monotone.hpp"
#include "majorder/parallel.hpp"
#include "majorder/poset.hpp"
#include "majorder/recur.hpp"

namespace majorder::cli {

namespace {

CanonicalSeq parse_or_usage(const std::string& text) {
  try {
    return parse_sequence(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

BigRat rational_or_usage(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Json bool_record(const std::string& property, std::uint64_t checked, std::uint64_t failures) {
  return Json{{"property", property}, {"checked", checked}, {"failures", failures}};
}

}  // namespace

std::uint64_t partition_count(std::uint32_t n) {
  // p[m][k]: partitions of m with parts <= k.
  std::vector<std::vector<std::uint64_t>> p(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint32_t k = 0; k <= n; ++k) p[0][k] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      p[m][k] = p[m][k - 1] + (k <= m ? p[m - k][k] : 0);
    }
  }
  return p[n][n];
}

// --- majorize / enumerate ---------------------------------------------------

RunReport cmd_majorize(const std::string& a_text, const std::string& b_text) {
  const CanonicalSeq a = parse_or_usage(a_text);
  const CanonicalSeq b = parse_or_usage(b_text);
  RunReport r;
  r.command = "majorize";
  r.parameters = Json{{"a", a.to_string()}, {"b", b.to_string()}, {"result", to_string(compare(a, b))}};
  std::uint64_t pa = 0, pb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    Json row{{"i", i + 1}};
    if (i < a.size()) pa += a[i], row["a_i"] = a[i];
    if (i < b.size()) pb += b[i], row["b_i"] = b[i];
    row["prefix_a"] = pa;
    row["prefix_b"] = pb;
    r.records.push_back(row);
  }
  return r;
}

RunReport cmd_enumerate(std::uint32_t max_sum, std::optional<std::uint32_t> max_len, bool pairs) {
  if (max_sum < 1) throw UsageError("max-sum must be >= 1");
  RunReport r;
  r.command = "enumerate";
  r.parameters = Json{{"max_sum", max_sum}, {"pairs", pairs}};
  if (max_len) r.parameters["max_len"] = *max_len;
  if (pairs) {
    if (max_len) throw UsageError("--max-len does not apply to --pairs");
    ComparablePairs cursor(max_sum);
    while (auto p = cursor.next()) r.records.push_back(Json{{"a", p->first.to_string()}, {"b", p->second.to_string()}});
  } else {
    SequenceEnumerator cursor(max_sum, max_len);
    while (auto s = cursor.next()) {
      r.records.push_back(Json{{"sequence", s->to_string()}, {"sum", s->sum()}, {"length", s->size()}});
    }
  }
  r.parameters["count"] = r.records.size();
  return r;
}

// --- solve -------------------------------------------------------------------

RunReport cmd_solve(const std::string& name, std::optional<std::uint32_t> bound, const Settings& s) {
  EquationId eq;
  try {
    eq = parse_equation(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const std::uint32_t n = bound.value_or(s.solve_bound);
  if (n < 1) throw UsageError("bound must be >= 1");
  SolveOptions options{s.config, s.threads};
  RunReport r;
  r.command = "solve";
  r.parameters = Json{{"equation", name}, {"bound", n}, {"threads", s.threads}};
  const SolveResult result = info(eq).shape == EquationShape::Sequence ? solve_sequence_equation(eq, n, options)
                                                                       : solve_rectangular(eq, n, options);
  append_solve_result(r, result);
  return r;
}

// --- verify suites -----------------------------------------------------------

namespace {

RunReport verify_poset(const VerifyOptions& o, const Settings& s) {
  const std::uint32_t n = o.max_sum.value_or(s.poset_max_sum);
  RunReport r;
  r.parameters = Json{{"max_sum", n}};
  const auto u = enumerate_sequences(n);
  std::uint64_t refl = 0, anti = 0, trans = 0, mirror = 0, part = 0;
  std::uint64_t refl_n = 0, anti_n = 0, trans_n = 0, mirror_n = 0, part_n = 0;

  std::vector<std::vector<char>> m(u.size(), std::vector<char>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) m[i][j] = majorizes(u[i], u[j]);
  }
  auto mirror_of = [](DominanceResult d) {
    switch (d) {
      case DominanceResult::FirstMajorizesStrictly: return DominanceResult::SecondMajorizesStrictly;
      case DominanceResult::SecondMajorizesStrictly: return DominanceResult::FirstMajorizesStrictly;
      default: return d;
    }
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    ++refl_n;
    if (!m[i][i]) ++refl;
    for (std::size_t j = 0; j < u.size(); ++j) {
      ++anti_n, ++mirror_n;
      if (m[i][j] && m[j][i] && i != j) ++anti;
      if (compare(u[i], u[j]) != mirror_of(compare(u[j], u[i]))) ++mirror;
      if (!m[i][j]) continue;
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (!m[j][k]) continue;
        ++trans_n;
        if (!m[i][k]) ++trans;
      }
    }
  }
  std::map<std::uint64_t, std::uint64_t> by_sum;
  for (const auto& x : u) ++by_sum[x.sum()];
  for (std::uint32_t t = 1; t <= n; ++t) {
    ++part_n;
    if (by_sum[t] != partition_count(t)) ++part;
  }
  r.records = Json::array({bool_record("reflexive", refl_n, refl), bool_record("antisymmetric", anti_n, anti),
                           bool_record("transitive", trans_n, trans), bool_record("mirror", mirror_n, mirror),
                           bool_record("partition_counts", part_n, part)});
  if (refl + anti + trans + mirror + part > 0) r.outcome = Outcome::CounterexampleFound;
  return r;
}

struct SweepTally {
  std::uint64_t pairs = 0, strict = 0, equal = 0;
  std::vector<std::string> violations, unresolved;
};

template <typename Check>
SweepTally sweep_pairs(const std::vector<CanonicalSeq>& u, unsigned threads, Check check) {
  const auto pairs = comparable_index_pairs(u);
  std::vector<SweepTally> parts(std::max(1u, threads));
  parallel_chunks(pairs.size(), threads, [&](std::size_t begin, std::size_t end, unsigned c) {
    SweepTally& t = parts[c];
    for (std::size_t p = begin; p < end; ++p) {
      const auto& a = u[pairs[p].first];
      const auto& b = u[pairs[p].second];
      ++t.pairs;
      try {
        const InequalityOutcome got = check(a, b);
        if (got == InequalityOutcome::Equal) {
          ++t.equal;
          if (!(a == b)) t.violations.push_back(a.to_string() + " vs " + b.to_string() + ": equal");
        } else {
          ++t.strict;
        }
      } catch (const TheoremViolation& e) {
        t.violations.push_back(e.what());
      } catch (const Unresolved& e) {
        t.unresolved.push_back(e.what());
      }
    }
  });
  SweepTally out;
  for (auto& t : parts) {
    out.pairs += t.pairs, out.strict += t.strict, out.equal += t.equal;
    out.violations.insert(out.violations.end(), t.violations.begin(), t.violations.end());
    out.unresolved.insert(out.unresolved.end(), t.unresolved.begin(), t.unresolved.end());
  }
  return out;
}

void record_sweep(RunReport& r, Json row, const SweepTally& t) {
  row["pairs"] = t.pairs;
  row["strict"] = t.strict;
  row["equal"] = t.equal;
  row["violations"] = t.violations.size();
  row["unresolved"] = t.unresolved.size();
  r.records.push_back(row);
  for (const auto& v : t.violations) r.records.push_back(Json{{"violation", v}});
  for (const auto& v : t.unresolved) r.records.push_back(Json{{"unresolved", v}});
  if (!t.violations.empty()) r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
  if (!t.unresolved.empty()) r.outcome = combine(r.outcome, Outcome::Unresolved);
}

const std::vector<FunctionTag> kProductFunctions = {FunctionTag::Factorial,    FunctionTag::FactOverSelfPower,
                                                   FunctionTag::RatioRoot,    FunctionTag::RatioRootPower,
                                                   FunctionTag::FibEvenIndex, FunctionTag::FibOddIndex};

RunReport verify_theorem_a(const VerifyOptions& o, const Settings& s) {
  const std::uint32_t n = o.max_sum.value_or(s.theorem_a_max_sum);
  const std::uint64_t x_max = std::max<std::uint64_t>(o.x_max.value_or(s.config.profile_x_max), n);
  RunReport r;
  r.parameters = Json{{"max_sum", n}, {"x_max", x_max}};
  const auto u = enumerate_sequences(n);
  for (FunctionTag tag : kProductFunctions) {
    const BuiltinF f = BuiltinF::of(tag);
    MonotoneCertificate cert;
    try {
      cert = ratio_profile(f, x_max, s.config);
    } catch (const NotMonotone& e) {
      r.records.push_back(Json{{"function", f.name()}, {"violation", e.what()}});
      r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
      continue;
    } catch (const Unresolved& e) {
      r.records.push_back(Json{{"function", f.name()}, {"unresolved", e.what()}});
      r.outcome = combine(r.outcome, Outcome::Unresolved);
      continue;
    }
    const auto table = f.table(n);
    const auto tally = sweep_pairs(u, s.threads, [&](const CanonicalSeq& a, const CanonicalSeq& b) {
      return verify_product_inequality(table, a, b, cert, s.config);
    });
    record_sweep(r, to_json(cert), tally);
  }
  return r;
}

RunReport verify_theorem_b(const VerifyOptions& o, const Settings& s) {
  const std::uint32_t n = o.max_sum.value_or(s.theorem_b_max_sum);
  const std::uint64_t x_max = std::max<std::uint64_t>(o.x_max.value_or(s.theorem_b_x_max), n);
  RunReport r;
  r.parameters = Json{{"max_sum", n}, {"x_max", x_max}, {"shift", "f(x) - f(0)"}};
  const auto u = enumerate_sequences(n);
  for (FunctionTag tag : {FunctionTag::F1, FunctionTag::F2}) {
    const BuiltinF f = BuiltinF::of(tag);
    MonotoneCertificate cert;
    try {
      cert = diff_profile(f, x_max, s.config.escalation.start_bits, s.config);
    } catch (const NotMonotone& e) {
      r.records.push_back(Json{{"function", f.name()}, {"violation", e.what()}});
      r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
      continue;
    } catch (const Unresolved& e) {
      r.records.push_back(Json{{"function", f.name()}, {"unresolved", e.what()}});
      r.outcome = combine(r.outcome, Outcome::Unresolved);
      continue;
    }
    const auto tally = sweep_pairs(u, s.threads, [&](const CanonicalSeq& a, const CanonicalSeq& b) {
      return verify_sum_inequality(f, a, b, cert, s.config.escalation.start_bits, s.config);
    });
    record_sweep(r, to_json(cert), tally);
  }
  return r;
}

RunReport verify_theorem_c(const VerifyOptions& o, const Settings& s) {
  const BigRat lo = rational_or_usage(o.grid_lo.value_or(s.theorem_c_lo));
  const BigRat hi = rational_or_usage(o.grid_hi.value_or(s.theorem_c_hi));
  const BigRat step = rational_or_usage(o.grid_step.value_or(s.theorem_c_step));
  if (lo <= 1 || hi < lo || step <= 0) throw UsageError("theorem-c grid needs 1 < lo <= hi and step > 0");
  RunReport r;
  r.parameters = Json{{"lo", to_string(lo)}, {"hi", to_string(hi)}, {"step", to_string(step)}};

  auto add = [&](const std::string& label, auto&& run) {
    try {
      const TheoremCResult c = run();
      Json row = to_json(c);
      row["x"] = label;
      r.records.push_back(row);
      if (!c.bound1 || !c.bound2) r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
    } catch (const Unresolved& e) {
      r.records.push_back(Json{{"x", label}, {"unresolved", e.what()}});
      r.outcome = combine(r.outcome, Outcome::Unresolved);
    }
  };
  std::vector<BigRat> grid;
  for (BigRat x = lo; x <= hi; x += step) grid.push_back(x);
  for (const auto& x : grid) {
    add(to_string(x), [&] { return theorem_c_check(x, s.config.escalation, s.config); });
  }
  const auto [e_lo, e_hi] = euler_e_bounds(s.config.escalation.start_bits);
  add("e", [&] { return theorem_c_check_hull(e_lo, e_hi, s.config.escalation, s.config); });

  for (long x : {2L, 5L, 10L, 20L}) {
    try {
      const SandwichResult w = gamma_sandwich_check(BigRat(x), s.config.escalation, s.config);
      r.records.push_back(Json{{"x", std::to_string(x)},
                               {"sandwich_digamma_lower", w.digamma_lower},
                               {"sandwich_digamma_upper", w.digamma_upper},
                               {"sandwich_ln_gamma_lower", w.ln_gamma_lower},
                               {"sandwich_ln_gamma_upper", w.ln_gamma_upper},
                               {"precision", w.precision}});
      if (!w.all()) r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
    } catch (const Unresolved& e) {
      r.records.push_back(Json{{"x", std::to_string(x)}, {"unresolved", e.what()}});
      r.outcome = combine(r.outcome, Outcome::Unresolved);
    }
  }
  r.parameters["points"] = grid.size() + 1;
  return r;
}

RunReport verify_fibonacci(const VerifyOptions& o, const Settings& s) {
  const std::uint64_t n = o.n_max.value_or(s.fibonacci_n_max);
  if (n < 1) throw UsageError("n-max must be >= 1");
  RunReport r;
  r.parameters = Json{{"n_max", n}, {"binet_n_max", s.binet_n_max}, {"binet_bits", s.binet_bits},
                      {"index_convention", "F0=F1=1"}};
  const FibSeq table(2 * n + 3);
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    if (table[i] != fib(i)) ++bad;
    if (i >= 2 && table[i] <= table[i - 1]) ++bad;
  }
  r.records.push_back(bool_record("recurrence_and_growth", table.size(), bad));
  if (bad) r.outcome = Outcome::CounterexampleFound;

  auto ratio_row = [&](const std::string& name, std::uint64_t offset) {
    std::vector<BigNat> terms;
    for (std::uint64_t k = 0; k <= n + 1; ++k) terms.push_back(table[2 * k + offset]);
    try {
      const RatioDirection d = ratio_monotone_check(terms);
      r.records.push_back(Json{{"property", name}, {"direction", to_string(d)}, {"checked", n}, {"failures", 0}});
    } catch (const NotMonotone& e) {
      r.records.push_back(Json{{"property", name}, {"violation", e.what()}});
      r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
    }
  };
  ratio_row("even_index_ratio", 0);
  ratio_row("odd_index_ratio", 1);

  const bool binet = binet_enclosure_check(s.binet_n_max, s.binet_bits);
  r.records.push_back(bool_record("binet_enclosure", s.binet_n_max + 1, binet ? 0 : 1));
  if (!binet) r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
  return r;
}

RunReport verify_recurrence(const VerifyOptions& o, const Settings& s) {
  const std::uint64_t max_index = o.max_index.value_or(s.recurrence_max_index);
  const std::uint64_t tuple_len = o.tuple_len.value_or(s.uniqueness_tuple_len);
  RunReport r;
  r.parameters = Json{{"a", "1..5"}, {"b", "-3..-1"}, {"a1", "0..6"}, {"terms", s.recurrence_terms},
                      {"max_index", max_index}, {"tuple_len", tuple_len}};
  std::uint64_t valid = 0, skipped = 0;
  for (std::int64_t a = 1; a <= 5; ++a) {
    for (std::int64_t b = -1; b >= -3; --b) {
      for (std::uint64_t a1 = 0; a1 <= 6; ++a1) {
        const RecurrenceSpec spec{a, b, a1};
        std::vector<BigNat> terms;
        try {
          terms = recurrence_terms(spec, std::max(s.recurrence_terms, max_index));
        } catch (const HypothesisViolated&) {
          ++skipped;
          continue;
        } catch (const NegativeTerm&) {
          ++skipped;
          continue;
        }
        ++valid;
        Json row{{"spec", spec.to_string()}};
        try {
          row["direction"] = to_string(ratio_monotone_check(terms));
        } catch (const Error& e) {
          row["violation"] = e.what();
          r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
        }
        const UniquenessReport u = uniqueness_check(recurrence_source(spec, max_index), max_index, tuple_len);
        row["pairs_checked"] = u.pairs_checked;
        row["violations"] = u.violations.size();
        if (!u.holds()) r.outcome = combine(r.outcome, Outcome::CounterexampleFound);
        r.records.push_back(row);
      }
    }
  }
  r.parameters["valid_specs"] = valid;
  r.parameters["skipped_specs"] = skipped;
  return r;
}

TermSource make_source(const std::string& name, const VerifyOptions& o, std::uint64_t max_index) {
  if (name == "fib-even") return fib_even_source(max_index);
  if (name == "fib-odd") return fib_odd_source(max_index);
  if (name == "recurrence") {
    if (!o.spec) throw UsageError("recurrence source needs --a, --b and --a1");
    try {
      return recurrence_source(*o.spec, max_index);
    } catch (const HypothesisViolated& e) {
      throw UsageError(e.what());
    } catch (const NegativeTerm& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown source '" + name + "' (fib-even, fib-odd, recurrence)");
}

}  // namespace

RunReport cmd_uniqueness(const std::string& source, const VerifyOptions& o, const Settings& s) {
  const std::uint64_t max_index = o.max_index.value_or(s.uniqueness_max_index);
  const std::uint64_t tuple_len = o.tuple_len.value_or(s.uniqueness_tuple_len);
  if (max_index < 1 || tuple_len < 1) throw UsageError("max-index and tuple-len must be >= 1");
  RunReport r;
  r.command = "uniqueness";
  r.parameters = Json{{"source", source}, {"max_index", max_index}, {"tuple_len", tuple_len}};
  append_uniqueness(r, uniqueness_check(make_source(source, o, max_index), max_index, tuple_len));
  return r;
}

RunReport cmd_verify(const std::string& suite, const VerifyOptions& o, const Settings& s) {
  RunReport r;
  if (suite == "poset-axioms") r = verify_poset(o, s);
  else if (suite == "theorem-a") r = verify_theorem_a(o, s);
  else if (suite == "theorem-b") r = verify_theorem_b(o, s);
  else if (suite == "theorem-c") r = verify_theorem_c(o, s);
  else if (suite == "fibonacci") r = verify_fibonacci(o, s);
  else if (suite == "recurrence") r = verify_recurrence(o, s);
  else if (suite == "uniqueness") r = cmd_uniqueness(o.source, o, s);
  else throw UsageError("unknown suite '" + suite + "'");
  r.command = "verify";
  r.parameters["suite"] = suite;
  r.parameters["threads"] = s.threads;
  return r;
}

// --- gamma / fib -------------------------------------------------------------

RunReport cmd_gamma(const std::string& x_text, std::optional<mpfr_prec_t> precision, const Settings& s) {
  const BigRat x = rational_or_usage(x_text);
  if (x <= 0) throw UsageError("x must be positive");
  const mpfr_prec_t bits = precision.value_or(s.config.escalation.start_bits);
  if (bits < 32) throw UsageError("precision must be >= 32");
  RunReport r;
  r.command = "gamma";
  r.parameters = Json{{"x", to_string(x)}, {"precision", bits}};
  r.records.push_back(Json{{"quantity", "ln_gamma"}, {"enclosure", to_json(ln_gamma_interval(x, bits, s.config))}});
  r.records.push_back(Json{{"quantity", "digamma"}, {"enclosure", to_json(digamma_interval(x, bits, s.config))}});
  if (x > 1) {
    try {
      const TheoremCResult c = theorem_c_check(x, s.config.escalation, s.config);
      Json row = to_json(c);
      row["quantity"] = "bounds";
      r.records.push_back(row);
      if (!c.bound1 || !c.bound2) r.outcome = Outcome::CounterexampleFound;
    } catch (const Unresolved& e) {
      r.records.push_back(Json{{"quantity", "bounds"}, {"unresolved", e.what()}});
      r.outcome = Outcome::Unresolved;
    }
  }
  return r;
}

RunReport cmd_fib(std::uint64_t n, bool binet, const Settings& s) {
  RunReport r;
  r.command = "fib";
  r.parameters = Json{{"n", n}, {"index_convention", "F0=F1=1"}};
  Json row{{"n", n}, {"value", to_string(fib(n))}};
  if (binet) {
    const RealInterval b = binet_interval(n, s.binet_bits);
    row["binet"] = to_json(b);
    row["binet_contains"] = b.contains(fib(n));
    if (!b.contains(fib(n))) r.outcome = Outcome::CounterexampleFound;
  }
  r.records.push_back(row);
  return r;
}

}  // namespace majorder::cli

#include "majorder/report.hpp"

#include <set>
#include <sstream>

namespace majorder {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Verified: return "Verified";
    case Outcome::CounterexampleFound: return "CounterexampleFound";
    case Outcome::Unresolved: return "Unresolved";
  }
  return "?";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Verified: return 0;
    case Outcome::CounterexampleFound: return 1;
    case Outcome::Unresolved: return 2;
  }
  return 2;
}

Outcome combine(Outcome x, Outcome y) {
  auto rank = [](Outcome o) {
    return o == Outcome::CounterexampleFound ? 2 : o == Outcome::Unresolved ? 1 : 0;
  };
  return rank(x) >= rank(y) ? x : y;
}

Json RunReport::to_json() const {
  return Json{{"command", command},
              {"parameters", parameters},
              {"outcome", majorder::to_string(outcome)},
              {"records", records},
              {"wall_time_us", wall_time_us}};
}

std::string canonical_json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string RunReport::to_json_text() const { return canonical_json_text(to_json()); }

namespace {

std::string csv_cell(const Json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.is_null() ? std::string() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string RunReport::to_csv() const {
  std::set<std::string> keys;
  for (const auto& r : records) {
    for (auto it = r.begin(); it != r.end(); ++it) keys.insert(it.key());
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& k : keys) out << (first ? "" : ",") << csv_cell(k), first = false;
  out << "\n";
  for (const auto& r : records) {
    first = true;
    for (const auto& k : keys) {
      out << (first ? "" : ",") << (r.contains(k) ? csv_cell(r.at(k)) : std::string());
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

Json to_json(const RealInterval& r) {
  return Json{{"lo", r.lo_decimal()}, {"hi", r.hi_decimal()}, {"precision", r.precision()}};
}

Json to_json(const CanonicalSeq& s) { return s.to_string(); }

Json to_json(const SolutionRecord& r) {
  Json j{{"equation", to_string(r.equation)},
         {"a", to_json(r.a)},
         {"b", to_json(r.b)},
         {"classification", to_string(r.classification)},
         {"lhs", r.lhs},
         {"rhs", r.rhs}};
  if (r.grid) {
    j["k"] = r.grid->k;
    j["n"] = r.grid->n;
  }
  return j;
}

Json to_json(const MonotoneCertificate& c) {
  return Json{{"function", c.function},
              {"kind", to_string(c.kind)},
              {"x_max", c.x_max},
              {"witness_checked", c.witness_checked},
              {"max_precision_used", c.max_precision_used}};
}

Json to_json(const TheoremCResult& r) {
  return Json{{"bound1", r.bound1},
              {"bound2", r.bound2},
              {"precision", r.precision},
              {"ln_gamma", to_json(r.ln_gamma)},
              {"stirling_floor", to_json(r.stirling_floor)},
              {"digamma", to_json(r.digamma)},
              {"log_x", to_json(r.log_x)}};
}

void append_solve_result(RunReport& report, const SolveResult& result) {
  for (const auto& r : result.records) report.records.push_back(to_json(r));
  for (const auto& [a, b] : result.unresolved) {
    report.records.push_back(Json{{"equation", to_string(result.equation)},
                                  {"a", to_json(a)},
                                  {"b", to_json(b)},
                                  {"classification", "Unresolved"}});
  }
  report.parameters["candidates"] = result.candidates;
  report.parameters["structural"] = result.structural;
  report.parameters["exponent_clearing"] = result.exponent_clearing;
  report.parameters["interval_fallback"] = result.interval_fallback;
  report.parameters["max_precision_used"] = result.max_precision_used;
  if (result.has_unexpected()) {
    report.outcome = combine(report.outcome, Outcome::CounterexampleFound);
  } else if (!result.unresolved.empty()) {
    report.outcome = combine(report.outcome, Outcome::Unresolved);
  }
}

void append_uniqueness(RunReport& report, const UniquenessReport& u) {
  report.records.push_back(Json{{"source", u.source},
                                {"max_index", u.max_index},
                                {"max_tuple_len", u.max_tuple_len},
                                {"tuples", u.tuples},
                                {"pairs_checked", u.pairs_checked},
                                {"violations", u.violations.size()},
                                {"index_convention", "F0=F1=1"}});
  for (const auto& [n, m] : u.violations) {
    report.records.push_back(Json{{"source", u.source}, {"violation_n", to_json(n)}, {"violation_m", to_json(m)}});
  }
  if (!u.holds()) report.outcome = combine(report.outcome, Outcome::CounterexampleFound);
}

}  // namespace majorder

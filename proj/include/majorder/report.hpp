#pragma once

// Machine-readable run reports. JSON output has sorted keys and no native
// floats; intervals are written as decimal-string bounds plus precision.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "majorder/dioph.hpp"
#include "majorder/gamma.hpp"
#include "majorder/interval.hpp"
#include "majorder/monotone.hpp"
#include "majorder/recur.hpp"

namespace majorder {

using Json = nlohmann::json;

enum class Outcome { Verified, CounterexampleFound, Unresolved };

const char* to_string(Outcome o);
/// 0 verified, 1 counterexample, 2 unresolved.
int exit_code(Outcome o);
/// The more severe of the two (CounterexampleFound > Unresolved > Verified).
Outcome combine(Outcome x, Outcome y);

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  Outcome outcome = Outcome::Verified;
  Json records = Json::array();  // flat objects
  std::int64_t wall_time_us = 0;

  Json to_json() const;
  /// Pretty-printed canonical JSON with a trailing newline.
  std::string to_json_text() const;
  /// Header row of every record key (sorted), then one row per record.
  std::string to_csv() const;
};

/// Canonical text for an already-parsed report.
std::string canonical_json_text(const Json& j);

Json to_json(const RealInterval& r);
Json to_json(const CanonicalSeq& s);
Json to_json(const SolutionRecord& r);
Json to_json(const MonotoneCertificate& c);
Json to_json(const TheoremCResult& r);

/// Records, outcome and summary parameters for a solver run.
void append_solve_result(RunReport& report, const SolveResult& result);
void append_uniqueness(RunReport& report, const UniquenessReport& u);

}  // namespace majorder

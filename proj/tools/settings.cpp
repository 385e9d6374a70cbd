#include "settings.hpp"

#include <cstdlib>
#include <fstream>

#include "majorder/errors.hpp"

namespace majorder::cli {

using nlohmann::json;

json to_json(const Settings& s) {
  return json{
      {"escalation", {{"start_bits", s.config.escalation.start_bits}, {"max_bits", s.config.escalation.max_bits}}},
      {"blowup_cap_bits", s.config.blowup_cap_bits},
      {"stirling_min_argument", s.config.stirling_min_argument},
      {"guard_bits", s.config.guard_bits},
      {"profile_x_max", s.config.profile_x_max},
      {"threads", s.threads},
      {"solve_bound", s.solve_bound},
      {"poset_max_sum", s.poset_max_sum},
      {"theorem_a_max_sum", s.theorem_a_max_sum},
      {"theorem_b_max_sum", s.theorem_b_max_sum},
      {"theorem_b_x_max", s.theorem_b_x_max},
      {"fibonacci_n_max", s.fibonacci_n_max},
      {"binet_n_max", s.binet_n_max},
      {"binet_bits", s.binet_bits},
      {"uniqueness_max_index", s.uniqueness_max_index},
      {"uniqueness_tuple_len", s.uniqueness_tuple_len},
      {"recurrence_terms", s.recurrence_terms},
      {"recurrence_max_index", s.recurrence_max_index},
      {"theorem_c_grid", {{"lo", s.theorem_c_lo}, {"hi", s.theorem_c_hi}, {"step", s.theorem_c_step}}},
  };
}

namespace {

template <typename T>
void take(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

Settings merge(Settings s, const json& j) {
  if (!j.is_object()) throw Error("settings must be a JSON object");
  const json known = to_json(s);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.contains(it.key())) throw Error("unknown settings key '" + it.key() + "'");
  }
  try {
    if (j.contains("escalation")) {
      take(j.at("escalation"), "start_bits", s.config.escalation.start_bits);
      take(j.at("escalation"), "max_bits", s.config.escalation.max_bits);
    }
    take(j, "blowup_cap_bits", s.config.blowup_cap_bits);
    take(j, "stirling_min_argument", s.config.stirling_min_argument);
    take(j, "guard_bits", s.config.guard_bits);
    take(j, "profile_x_max", s.config.profile_x_max);
    take(j, "threads", s.threads);
    take(j, "solve_bound", s.solve_bound);
    take(j, "poset_max_sum", s.poset_max_sum);
    take(j, "theorem_a_max_sum", s.theorem_a_max_sum);
    take(j, "theorem_b_max_sum", s.theorem_b_max_sum);
    take(j, "theorem_b_x_max", s.theorem_b_x_max);
    take(j, "fibonacci_n_max", s.fibonacci_n_max);
    take(j, "binet_n_max", s.binet_n_max);
    take(j, "binet_bits", s.binet_bits);
    take(j, "uniqueness_max_index", s.uniqueness_max_index);
    take(j, "uniqueness_tuple_len", s.uniqueness_tuple_len);
    take(j, "recurrence_terms", s.recurrence_terms);
    take(j, "recurrence_max_index", s.recurrence_max_index);
    if (j.contains("theorem_c_grid")) {
      take(j.at("theorem_c_grid"), "lo", s.theorem_c_lo);
      take(j.at("theorem_c_grid"), "hi", s.theorem_c_hi);
      take(j.at("theorem_c_grid"), "step", s.theorem_c_step);
    }
  } catch (const json::exception& e) {
    throw Error(std::string("bad settings value: ") + e.what());
  }
  if (s.config.escalation.start_bits < 32 || s.config.escalation.max_bits < s.config.escalation.start_bits) {
    throw Error("escalation needs 32 <= start_bits <= max_bits");
  }
  return s;
}

Settings load_settings_file(const std::string& path, Settings base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open settings file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
  return merge(std::move(base), j);
}

void apply_environment(Settings& s) {
  const char* cap = std::getenv("MAJORDER_MAX_PRECISION");
  if (!cap || !*cap) return;
  char* end = nullptr;
  const long bits = std::strtol(cap, &end, 10);
  if (*end != '\0' || bits < 32) throw Error("MAJORDER_MAX_PRECISION must be an integer >= 32");
  s.config.escalation.max_bits = bits;
  s.config.escalation.start_bits = std::min<mpfr_prec_t>(s.config.escalation.start_bits, bits);
}

}  // namespace majorder::cli

#pragma once

// Run-time defaults for the command-line tool. The shipped
// config/defaults.json holds the same values; --config overrides them and
// explicit flags override the file.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "majorder/bigint.hpp"
#include "majorder/config.hpp"

namespace majorder::cli {

struct Settings {
  Config config;
  unsigned threads = 1;
  std::uint32_t solve_bound = 10;
  std::uint32_t poset_max_sum = 9;
  std::uint32_t theorem_a_max_sum = 12;
  std::uint32_t theorem_b_max_sum = 10;
  std::uint32_t theorem_b_x_max = 30;
  std::uint64_t fibonacci_n_max = 200;
  std::uint64_t binet_n_max = 100;
  mpfr_prec_t binet_bits = 256;
  std::uint64_t uniqueness_max_index = 10;
  std::uint64_t uniqueness_tuple_len = 3;
  std::uint64_t recurrence_terms = 20;
  std::uint64_t recurrence_max_index = 8;
  std::string theorem_c_lo = "11/10";
  std::string theorem_c_hi = "50";
  std::string theorem_c_step = "1/10";
};

nlohmann::json to_json(const Settings& s);
/// Overlays the keys present in `j` on `base`. Unknown keys throw Error.
Settings merge(Settings base, const nlohmann::json& j);
Settings load_settings_file(const std::string& path, Settings base = {});
/// Applies MAJORDER_MAX_PRECISION when set. Throws Error on a bad value.
void apply_environment(Settings& s);

}  // namespace majorder::cli

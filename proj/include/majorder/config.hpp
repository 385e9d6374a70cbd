#pragma once

#include <cstdint>

#include <mpfr.h>

namespace majorder {

/// Precision schedule for interval escalation: start, double, give up past max.
struct Escalation {
  mpfr_prec_t start_bits = 128;
  mpfr_prec_t max_bits = 8192;
};

/// Tunables shared by the library. The CLI mirrors these in
/// config/defaults.json and lets flags override them.
struct Config {
  Escalation escalation;
  /// Exponent clearing is skipped when the estimated bit size of the cleared
  /// products exceeds this cap; interval escalation decides instead.
  std::uint64_t blowup_cap_bits = std::uint64_t{1} << 24;
  /// Stirling series are evaluated only at arguments at least this large
  /// (raised further when the requested precision demands it).
  std::uint32_t stirling_min_argument = 10;
  /// Extra working bits carried through transcendental evaluations.
  mpfr_prec_t guard_bits = 64;
  std::uint32_t profile_x_max = 200;
};

inline const Config& default_config() {
  static const Config config{};
  return config;
}

}  // namespace majorder

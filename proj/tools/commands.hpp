#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "majorder/errors.hpp"
#include "majorder/report.hpp"
#include "settings.hpp"

namespace majorder::cli {

/// Bad arguments; the tool exits with 64.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kUsageExit = 64;

RunReport cmd_majorize(const std::string& a, const std::string& b);
RunReport cmd_enumerate(std::uint32_t max_sum, std::optional<std::uint32_t> max_len, bool pairs);
RunReport cmd_solve(const std::string& equation, std::optional<std::uint32_t> bound, const Settings& s);

struct VerifyOptions {
  std::optional<std::uint32_t> max_sum;
  std::optional<std::uint64_t> x_max;
  std::optional<std::uint64_t> max_index;
  std::optional<std::uint64_t> tuple_len;
  std::optional<std::uint64_t> n_max;
  std::string source = "fib-even";
  std::optional<RecurrenceSpec> spec;
  std::optional<std::string> grid_lo, grid_hi, grid_step;
};

/// Suites: poset-axioms, theorem-a, theorem-b, theorem-c, fibonacci,
/// recurrence, uniqueness.
RunReport cmd_verify(const std::string& suite, const VerifyOptions& o, const Settings& s);
RunReport cmd_uniqueness(const std::string& source, const VerifyOptions& o, const Settings& s);
RunReport cmd_gamma(const std::string& x, std::optional<mpfr_prec_t> precision, const Settings& s);
RunReport cmd_fib(std::uint64_t n, bool binet, const Settings& s);

/// Number of partitions of n, by the recursion on the largest part.
std::uint64_t partition_count(std::uint32_t n);

}  // namespace majorder::cli

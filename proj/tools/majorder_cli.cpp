#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace majorder;
using namespace majorder::cli;

namespace {

struct Globals {
  std::string format = "json";
  std::optional<unsigned> threads;
  std::string config_path;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization order, factorial Diophantine solvers and Gamma bound checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--config", g.config_path, "Settings file overriding the built-in defaults");

  std::string seq_a, seq_b;
  auto* majorize = app.add_subcommand("majorize", "Compare two sequences and print the prefix-sum table");
  majorize->add_option("a", seq_a, "Comma-separated positive integers")->required();
  majorize->add_option("b", seq_b, "Comma-separated positive integers")->required();

  std::uint32_t enum_max_sum = 0;
  std::optional<std::uint32_t> enum_max_len;
  bool enum_pairs = false;
  auto* enumerate = app.add_subcommand("enumerate", "List canonical sequences (or comparable pairs)");
  enumerate->add_option("max_sum", enum_max_sum)->required();
  enumerate->add_option("--max-len", enum_max_len);
  enumerate->add_flag("--pairs", enum_pairs, "List ordered pairs (a, b) with a majorizing b");

  std::string equation;
  std::optional<std::uint32_t> bound;
  auto* solve = app.add_subcommand("solve", "Exhaustively solve a catalog equation");
  solve->add_option("equation", equation)->required();
  solve->add_option("bound", bound, "max sum for sequence equations, n_max for (k, n) equations");

  VerifyOptions vo;
  std::optional<std::int64_t> spec_a, spec_b;
  std::optional<std::uint64_t> spec_a1;
  std::string suite;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-index", vo.max_index);
    cmd->add_option("--tuple-len", vo.tuple_len);
    cmd->add_option("--a", spec_a, "Recurrence coefficient a");
    cmd->add_option("--b", spec_b, "Recurrence coefficient b");
    cmd->add_option("--a1", spec_a1, "Recurrence start A1");
  };
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)
      ->required()
      ->description("poset-axioms, theorem-a, theorem-b, theorem-c, fibonacci, recurrence, uniqueness");
  verify->add_option("--max-sum", vo.max_sum);
  verify->add_option("--x-max", vo.x_max);
  verify->add_option("--n-max", vo.n_max);
  verify->add_option("--source", vo.source, "fib-even, fib-odd or recurrence");
  verify->add_option("--lo", vo.grid_lo);
  verify->add_option("--hi", vo.grid_hi);
  verify->add_option("--step", vo.grid_step);
  add_common(verify);

  std::string source;
  auto* uniqueness = app.add_subcommand("uniqueness", "Search for equal products of index tuples");
  uniqueness->add_option("source", source, "fib-even, fib-odd or recurrence")->required();
  add_common(uniqueness);

  std::string gamma_x;
  std::optional<mpfr_prec_t> gamma_bits;
  auto* gamma = app.add_subcommand("gamma", "Enclose ln Gamma and digamma at a rational point");
  gamma->add_option("x", gamma_x)->required();
  gamma->add_option("--precision", gamma_bits);

  std::uint64_t fib_n = 0;
  bool fib_binet = false;
  auto* fibc = app.add_subcommand("fib", "Fibonacci number with F0 = F1 = 1");
  fibc->add_option("n", fib_n)->required();
  fibc->add_flag("--binet", fib_binet, "Also enclose the Binet form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  try {
    Settings s;
    if (!g.config_path.empty()) s = load_settings_file(g.config_path);
    apply_environment(s);
    if (g.threads) s.threads = *g.threads;
    if (spec_a || spec_b || spec_a1) {
      if (!(spec_a && spec_b && spec_a1)) throw UsageError("--a, --b and --a1 go together");
      vo.spec = RecurrenceSpec{*spec_a, *spec_b, *spec_a1};
    }

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    if (*majorize) report = cmd_majorize(seq_a, seq_b);
    else if (*enumerate) report = cmd_enumerate(enum_max_sum, enum_max_len, enum_pairs);
    else if (*solve) report = cmd_solve(equation, bound, s);
    else if (*verify) report = cmd_verify(suite, vo, s);
    else if (*uniqueness) report = cmd_uniqueness(source, vo, s);
    else if (*gamma) report = cmd_gamma(gamma_x, gamma_bits, s);
    else report = cmd_fib(fib_n, fib_binet, s);
    report.wall_time_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();

    std::cout << (g.format == "csv" ? report.to_csv() : report.to_json_text());
    return exit_code(report.outcome);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const PreconditionUnmet& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const Unresolved& e) {
    std::cerr << e.what() << "\n";
    return exit_code(Outcome::Unresolved);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageExit;
  }
}

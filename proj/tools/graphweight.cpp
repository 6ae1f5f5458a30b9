// graphweight: exact φ/ψ graph invariants and identity verification.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "graphweight/graph.hpp"
#include "graphweight/graph6.hpp"
#include "graphweight/report_format.hpp"
#include "graphweight/verify.hpp"
#include "selftest.hpp"

using namespace graphweight;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string input_format = "g6";
  std::string formula = "all";
  int edge_budget = 24;
  int vertex_budget = 30;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::string output = "plain";
  bool timings = false;
};

void add_common(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--format", o.input_format, "Input format")
      ->check(CLI::IsMember({"g6", "edges"}))
      ->capture_default_str();
  cmd.add_option("--formula", o.formula, "Formula to evaluate")
      ->check(CLI::IsMember({"definition", "eulerian", "corank", "all"}))
      ->capture_default_str();
  cmd.add_option("--edge-budget", o.edge_budget, "Max |E| for the definition formula")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--vertex-budget", o.vertex_budget, "Max n for the eulerian and corank formulas")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd.add_option("--output", o.output, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "jsonl"}))
      ->capture_default_str();
  cmd.add_flag("--timings", o.timings, "Include per-formula wall times in the output");
}

RunConfig to_config(const CommonOptions& o) {
  RunConfig cfg;
  cfg.format = o.input_format == "edges" ? InputFormat::edges : InputFormat::graph6;
  if (o.formula != "all") {
    cfg.formulas = {o.formula == "definition", o.formula == "eulerian", o.formula == "corank"};
  }
  cfg.budgets = {o.edge_budget, o.vertex_budget};
  cfg.threads = o.threads;
  return cfg;
}

FormatOptions to_format(const CommonOptions& o) {
  static const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::plain}, {"csv", OutputFormat::csv}, {"jsonl", OutputFormat::jsonl}};
  return {formats.at(o.output), o.timings};
}

void warn_skips(const VerificationReport& r) {
  for (const auto& o : r.outcomes)
    if (o.skipped_for_budget)
      std::cerr << "warning: graph " << r.index << " (" << (r.graph_id.empty() ? "-" : r.graph_id)
                << "): skipped: " << o.skip_reason << '\n';
}

// Runs cfg and streams records to stdout. In `failures_only` mode plain
// output lists only failing graphs and the summary goes to stdout.
int execute(const RunConfig& cfg, const FormatOptions& fmt, std::istream& in, bool failures_only) {
  auto source = make_source(cfg, in);
  const bool quiet_plain = failures_only && fmt.format == OutputFormat::plain;
  if (fmt.format == OutputFormat::csv) std::cout << csv_header(fmt) << '\n';
  const RunSummary summary = run(cfg, *source, [&](const VerificationReport& r) {
    warn_skips(r);
    if (!quiet_plain || r.failed()) std::cout << format_report(r, fmt) << '\n';
  });
  std::cout.flush();
  if (failures_only) {
    (quiet_plain ? std::cout : std::cerr) << format_summary(summary) << '\n';
    std::cerr << "elapsed " << summary.elapsed.count() << " s\n";
  }
  return summary.failed() ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph invariants phi and psi, with identity verification"};
  app.require_subcommand(1);

  CommonOptions compute_opts;
  std::string compute_input;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate invariants for graphs read from a file or stdin");
  compute_cmd->add_option("input", compute_input, "Input file (default: stdin)");
  add_common(*compute_cmd, compute_opts);

  CommonOptions verify_opts;
  int exhaustive_n = -1;
  std::vector<std::string> random_args;
  std::uint64_t seed = 0;
  std::string verify_input;
  bool check_identities = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check that all formulas agree on a graph corpus");
  auto* ex_opt = verify_cmd->add_option("--exhaustive", exhaustive_n, "All labelled graphs on n vertices (n <= 8)")
                     ->check(CLI::Range(0, 8));
  auto* rnd_opt = verify_cmd->add_option("--random", random_args, "Random graphs: n p count")
                      ->expected(3)
                      ->type_name("N P COUNT");
  auto* in_opt = verify_cmd->add_option("--input", verify_input, "Graph file");
  ex_opt->excludes(rnd_opt, in_opt);
  rnd_opt->excludes(in_opt);
  verify_cmd->add_option("--seed", seed, "Seed for random graphs and identity sampling");
  verify_cmd->add_flag("--check-identities", check_identities,
                       "Also check the kernel-count bijection and parity identities on vertex subsets");
  add_common(*verify_cmd, verify_opts);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in golden checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*selftest_cmd) {
      const int failures = tools::run_selftest(std::cout);
      std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
      return failures == 0 ? kExitOk : kExitMismatch;
    }

    if (*compute_cmd) {
      RunConfig cfg = to_config(compute_opts);
      cfg.mode = RunMode::file;
      if (compute_input.empty() || compute_input == "-")
        return execute(cfg, to_format(compute_opts), std::cin, false);
      std::ifstream file(compute_input);
      if (!file) throw std::runtime_error("cannot open " + compute_input);
      return execute(cfg, to_format(compute_opts), file, false);
    }

    RunConfig cfg = to_config(verify_opts);
    cfg.seed = seed;
    cfg.check_identities = check_identities;
    std::ifstream file;
    if (*ex_opt) {
      cfg.mode = RunMode::exhaustive;
      cfg.n = exhaustive_n;
    } else if (*rnd_opt) {
      cfg.mode = RunMode::random;
      cfg.n = std::stoi(random_args[0]);
      cfg.p = Probability::parse(random_args[1]);
      cfg.count = std::stoull(random_args[2]);
    } else if (*in_opt) {
      cfg.mode = RunMode::file;
      file.open(verify_input);
      if (!file) throw std::runtime_error("cannot open " + verify_input);
    } else {
      std::cerr << "error: verify needs one of --exhaustive, --random, --input\n";
      return kExitUsage;
    }
    return execute(cfg, to_format(verify_opts), file, true);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

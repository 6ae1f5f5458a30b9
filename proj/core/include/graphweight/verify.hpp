#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>

#include "graphweight/graph.hpp"
#include "graphweight/invariants.hpp"
#include "graphweight/random_graph.hpp"

namespace graphweight {

inline constexpr std::array<Formula, 3> kAllFormulas{Formula::definition, Formula::eulerian,
                                                     Formula::corank};

enum class RunMode { exhaustive, random, file };
enum class InputFormat { graph6, edges };

struct RunConfig {
  RunMode mode = RunMode::file;
  int n = 0;                      // exhaustive and random modes
  Probability p{1, 2};            // random mode
  std::uint64_t count = 1;        // random mode
  std::uint64_t seed = 0;         // random graphs and identity sampling
  Budgets budgets;
  std::array<bool, 3> formulas{true, true, true};  // indexed by Formula
  bool check_identities = false;
  int identity_exhaustive_max_n = 6;  // all 2^n subsets up to this order
  int identity_samples = 256;         // sampled subsets above it
  unsigned threads = 1;
  InputFormat format = InputFormat::graph6;  // file mode

  [[nodiscard]] bool selected(Formula f) const noexcept {
    return formulas[static_cast<std::size_t>(f)];
  }
  /// Throws std::invalid_argument when the configuration is inconsistent.
  void validate() const;
};

struct FormulaOutcome {
  std::optional<InvariantValue> value;  // empty when skipped or not selected
  bool skipped_for_budget = false;
  std::string skip_reason;
  std::chrono::duration<double, std::milli> elapsed{};
};

struct VerificationReport {
  std::uint64_t index = 0;  // position in the input stream
  std::string graph_id;     // graph6, empty when n > 62
  int n = 0;
  int m = 0;
  std::array<FormulaOutcome, 3> outcomes;  // indexed by Formula
  bool all_equal = true;                   // over computed formulas only
  std::uint64_t claim_checked = 0;
  std::uint64_t parity_checked = 0;
  std::uint64_t identity_violations = 0;

  [[nodiscard]] const FormulaOutcome& outcome(Formula f) const {
    return outcomes[static_cast<std::size_t>(f)];
  }
  [[nodiscard]] int computed_count() const;
  [[nodiscard]] bool failed() const { return !all_equal || identity_violations != 0; }
};

/// Runs every selected formula within budget, plus the subset identities
/// when enabled. Throws BudgetExceeded only if no selected formula fits.
VerificationReport verify_graph(const Graph& g, const RunConfig& cfg, std::uint64_t index = 0);

/// Checks the kernel-count bijection, parity congruence, and the
/// Eulerian/even-set bridge for one subset; returns false on any violation.
bool check_subset_identities(const Graph& g, const VertexSubset& u);

/// Pull-based stream of input graphs.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  virtual std::optional<Graph> next() = 0;
};

/// Every labelled graph on n vertices, in edge-code order.
std::unique_ptr<GraphSource> exhaustive_source(int n);
/// `count` draws of random_graph(n, p, splitmix64_at(seed, i)).
std::unique_ptr<GraphSource> random_source(int n, Probability p, std::uint64_t count,
                                           std::uint64_t seed);
/// One graph6 line per graph, or edge-list blocks each opened by "n <count>".
/// Parse errors surface from next() as Graph6Error / GraphError.
std::unique_ptr<GraphSource> stream_source(std::istream& in, InputFormat format);

struct RunSummary {
  std::uint64_t graphs = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t identity_violations = 0;
  std::uint64_t claim_checked = 0;
  std::uint64_t parity_checked = 0;
  std::uint64_t budget_skips = 0;   // individual formulas skipped
  std::uint64_t skipped_graphs = 0; // graphs with no computable formula
  std::chrono::duration<double> elapsed{};

  [[nodiscard]] bool failed() const { return mismatches != 0 || identity_violations != 0; }
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// Verifies every graph from `source` on cfg.threads workers; `sink` sees
/// reports in input order regardless of completion order.
RunSummary run(const RunConfig& cfg, GraphSource& source, const ReportSink& sink);

/// Builds the source implied by cfg.mode (file mode reads `in`).
std::unique_ptr<GraphSource> make_source(const RunConfig& cfg, std::istream& in);

}  // namespace graphweight

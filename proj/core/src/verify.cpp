#include "graphweight/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include "graphweight/gf2.hpp"
#include "graphweight/graph6.hpp"

namespace graphweight {

namespace {

using Clock = std::chrono::steady_clock;

// Separates the identity-sampling stream from the graph stream when both
// derive from cfg.seed.
constexpr std::uint64_t kSamplingSalt = 0x5AB5E7C0FFEE1234ULL;

std::string graph_id(const Graph& g) {
  return g.order() <= kMaxGraph6Order ? encode_graph6(g) : std::string{};
}

void run_identities(const Graph& g, const RunConfig& cfg, std::uint64_t index,
                    VerificationReport& report) {
  const int n = g.order();
  auto check = [&](Mask mask) {
    ++report.claim_checked;
    ++report.parity_checked;
    if (!check_subset_identities(g, VertexSubset(n, mask))) ++report.identity_violations;
  };
  if (n <= cfg.identity_exhaustive_max_n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) check(mask);
    return;
  }
  const std::uint64_t stream = splitmix64_at(cfg.seed ^ kSamplingSalt, index);
  for (int s = 0; s < cfg.identity_samples; ++s)
    check(splitmix64_at(stream, static_cast<std::uint64_t>(s)) & low_bits(n));
}

VerificationReport all_skipped(const Graph& g, const RunConfig& cfg, std::uint64_t index) {
  VerificationReport r;
  r.index = index;
  r.graph_id = graph_id(g);
  r.n = g.order();
  r.m = g.size();
  for (Formula f : kAllFormulas) {
    if (!cfg.selected(f)) continue;
    auto& o = r.outcomes[static_cast<std::size_t>(f)];
    o.skipped_for_budget = true;
    try {
      compute(f, g, cfg.budgets);
    } catch (const BudgetExceeded& e) {
      o.skip_reason = e.what();
    }
  }
  return r;
}

class ExhaustiveSource final : public GraphSource {
 public:
  explicit ExhaustiveSource(int n) : n_(n), total_(labeled_graph_count(n)) {}
  std::optional<Graph> next() override {
    if (code_ >= total_) return std::nullopt;
    return labeled_graph(n_, code_++);
  }

 private:
  int n_;
  std::uint64_t total_;
  std::uint64_t code_ = 0;
};

class RandomSource final : public GraphSource {
 public:
  RandomSource(int n, Probability p, std::uint64_t count, std::uint64_t seed)
      : n_(n), p_(p), count_(count), seed_(seed) {}
  std::optional<Graph> next() override {
    if (i_ >= count_) return std::nullopt;
    return random_graph(n_, p_, splitmix64_at(seed_, i_++));
  }

 private:
  int n_;
  Probability p_;
  std::uint64_t count_;
  std::uint64_t seed_;
  std::uint64_t i_ = 0;
};

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

class StreamSource final : public GraphSource {
 public:
  StreamSource(std::istream& in, InputFormat format) : in_(in), format_(format) {}

  std::optional<Graph> next() override {
    return format_ == InputFormat::graph6 ? next_graph6() : next_edge_list();
  }

 private:
  std::optional<Graph> next_graph6() {
    std::string line;
    while (std::getline(in_, line)) {
      const auto text = strip(line);
      if (text.empty() || text.starts_with(">>graph6<<")) continue;
      return parse_graph6(text);
    }
    return std::nullopt;
  }

  std::optional<Graph> next_edge_list() {
    std::string block = std::move(pending_header_);
    pending_header_.clear();
    std::string line;
    while (std::getline(in_, line)) {
      const auto text = strip(line);
      if (text.empty()) continue;
      if (text.front() == 'n' && !block.empty()) {
        pending_header_ = std::string(text) + '\n';
        break;
      }
      block.append(text).push_back('\n');
    }
    if (block.empty()) return std::nullopt;
    return parse_edge_list(block);
  }

  std::istream& in_;
  InputFormat format_;
  std::string pending_header_;
};

}  // namespace

void RunConfig::validate() const {
  if (p.den == 0 || p.num > p.den) throw std::invalid_argument("edge probability must lie in [0, 1]");
  if (mode == RunMode::random && count < 1) throw std::invalid_argument("random mode needs count >= 1");
  if (mode == RunMode::exhaustive && (n < 0 || n > 8))
    throw std::invalid_argument("exhaustive mode supports 0 <= n <= 8");
  if (mode == RunMode::random && (n < 0 || n > kMaxGraph6Order))
    throw std::invalid_argument("random mode supports 0 <= n <= 62");
  if (std::none_of(formulas.begin(), formulas.end(), [](bool b) { return b; }))
    throw std::invalid_argument("no formula selected");
  if (budgets.edge_budget < 0 || budgets.vertex_budget < 0)
    throw std::invalid_argument("budgets must be non-negative");
  if (identity_samples < 0) throw std::invalid_argument("identity sample count must be non-negative");
}

int VerificationReport::computed_count() const {
  return static_cast<int>(std::count_if(outcomes.begin(), outcomes.end(),
                                        [](const FormulaOutcome& o) { return o.value.has_value(); }));
}

bool check_subset_identities(const Graph& g, const VertexSubset& u) {
  bool ok = constrained_vector_count(g, u) == kernel_count(adjacency_matrix(g, u));
  const ParityWitness w = parity_witness(g, u);
  ok = ok && (w.odd_degree_count - w.cut) % 2 == 0;
  ok = ok && (u.is_subset_of(even_set(g, u)) == is_eulerian_induced(g, u));
  return ok;
}

VerificationReport verify_graph(const Graph& g, const RunConfig& cfg, std::uint64_t index) {
  VerificationReport r;
  r.index = index;
  r.graph_id = graph_id(g);
  r.n = g.order();
  r.m = g.size();

  const DyadicRational* first = nullptr;
  int attempted = 0;
  std::optional<BudgetExceeded> last_budget_error;
  for (Formula f : kAllFormulas) {
    if (!cfg.selected(f)) continue;
    ++attempted;
    auto& o = r.outcomes[static_cast<std::size_t>(f)];
    const auto start = Clock::now();
    try {
      o.value = compute(f, g, cfg.budgets);
    } catch (const BudgetExceeded& e) {
      o.skipped_for_budget = true;
      o.skip_reason = e.what();
      last_budget_error = e;
      continue;
    }
    o.elapsed = Clock::now() - start;
    if (first == nullptr)
      first = &o.value->value;
    else if (!(*first == o.value->value))
      r.all_equal = false;
  }
  if (attempted > 0 && r.computed_count() == 0) throw *last_budget_error;

  if (cfg.check_identities) run_identities(g, cfg, index, r);
  return r;
}

std::unique_ptr<GraphSource> exhaustive_source(int n) { return std::make_unique<ExhaustiveSource>(n); }

std::unique_ptr<GraphSource> random_source(int n, Probability p, std::uint64_t count,
                                           std::uint64_t seed) {
  return std::make_unique<RandomSource>(n, p, count, seed);
}

std::unique_ptr<GraphSource> stream_source(std::istream& in, InputFormat format) {
  return std::make_unique<StreamSource>(in, format);
}

std::unique_ptr<GraphSource> make_source(const RunConfig& cfg, std::istream& in) {
  switch (cfg.mode) {
    case RunMode::exhaustive: return exhaustive_source(cfg.n);
    case RunMode::random: return random_source(cfg.n, cfg.p, cfg.count, cfg.seed);
    case RunMode::file: return stream_source(in, cfg.format);
  }
  throw std::invalid_argument("unknown run mode");
}

RunSummary run(const RunConfig& cfg, GraphSource& source, const ReportSink& sink) {
  cfg.validate();
  const auto start = Clock::now();
  const unsigned workers = std::max(1U, cfg.threads);
  const std::size_t batch_size = 64 * static_cast<std::size_t>(workers);

  RunSummary summary;
  std::vector<Graph> batch;
  std::vector<std::optional<VerificationReport>> results;
  std::vector<std::exception_ptr> errors;
  std::uint64_t next_index = 0;
  bool exhausted = false;
  std::exception_ptr source_error;

  while (!exhausted) {
    batch.clear();
    while (batch.size() < batch_size) {
      std::optional<Graph> g;
      try {
        g = source.next();
      } catch (...) {
        source_error = std::current_exception();
      }
      if (!g) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) break;

    results.assign(batch.size(), std::nullopt);
    errors.assign(batch.size(), nullptr);
    const std::uint64_t base = next_index;
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i = cursor++; i < batch.size(); i = cursor++) {
        try {
          results[i] = verify_graph(batch[i], cfg, base + i);
        } catch (const BudgetExceeded&) {
          results[i] = all_skipped(batch[i], cfg, base + i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(workers, batch.size()); ++t) pool.emplace_back(work);
    }

    // In-order reassembly.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      const auto& r = *results[i];
      ++summary.graphs;
      if (!r.all_equal) ++summary.mismatches;
      summary.identity_violations += r.identity_violations;
      summary.claim_checked += r.claim_checked;
      summary.parity_checked += r.parity_checked;
      for (const auto& o : r.outcomes) summary.budget_skips += o.skipped_for_budget ? 1 : 0;
      if (r.computed_count() == 0) ++summary.skipped_graphs;
      sink(r);
    }
    next_index += batch.size();
  }
  if (source_error) std::rethrow_exception(source_error);
  summary.elapsed = Clock::now() - start;
  return summary;
}

}  // namespace graphweight

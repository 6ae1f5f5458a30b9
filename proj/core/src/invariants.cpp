#include "graphweight/invariants.hpp"

#include <array>
#include <bit>
#include <vector>

#include "graphweight/colorings.hpp"
#include "graphweight/gf2.hpp"

namespace graphweight {

namespace {

// 2^62 subsets is already far past anything enumerable; the cap keeps the
// loop counters inside one word.
constexpr int kHardSubsetCap = 62;

void check_budget(Formula f, int limit, int actual) {
  if (actual > limit || actual > kHardSubsetCap) throw BudgetExceeded(f, limit, actual);
}

BigInt from_wide(WideCount c) {
  BigInt out = static_cast<std::uint64_t>(c >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(c);
  return out;
}

// Σ_e bucket[e] * 2^e for signed word-sized buckets.
BigInt weighted_sum(std::span<const std::int64_t> buckets) {
  BigInt total = 0;
  for (std::size_t e = 0; e < buckets.size(); ++e)
    if (buckets[e] != 0) total += BigInt{buckets[e]} << e;
  return total;
}

unsigned scale_exponent(const Graph& g) { return 3U * static_cast<unsigned>(g.order()); }

}  // namespace

std::string_view to_string(Formula f) noexcept {
  switch (f) {
    case Formula::definition: return "definition";
    case Formula::eulerian: return "eulerian";
    case Formula::corank: return "corank";
  }
  return "unknown";
}

BudgetExceeded::BudgetExceeded(Formula formula, int limit, int actual)
    : std::runtime_error(std::string(to_string(formula)) + " formula over budget: " +
                         (formula == Formula::definition ? "|E| = " : "n = ") +
                         std::to_string(actual) + " exceeds limit " + std::to_string(limit)),
      formula_(formula),
      limit_(limit),
      actual_(actual) {}

InvariantValue phi_definition(const Graph& g, const Budgets& budgets) {
  const int m = g.size();
  check_budget(Formula::definition, budgets.edge_budget, m);
  const auto edges = g.edges();

  // Per-|E'| sums of χ₃, spilled into BigInt whenever the 128-bit partial
  // would overflow.
  std::vector<WideCount> partial(static_cast<std::size_t>(m) + 1, 0);
  std::vector<BigInt> spilled(static_cast<std::size_t>(m) + 1, 0);

  std::vector<Mask> rows(static_cast<std::size_t>(g.order()), 0);
  // Spanning subgraphs share most of their 2-core components.
  Chi3Memo memo(g);
  const std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t contributing = 0;
  int selected = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step != 0) {
      const auto& e = edges[static_cast<std::size_t>(std::countr_zero(step))];
      const Mask bu = Mask{1} << e.u;
      const Mask bv = Mask{1} << e.v;
      rows[static_cast<std::size_t>(e.u)] ^= bv;
      const bool added = (rows[static_cast<std::size_t>(e.u)] & bv) != 0;
      rows[static_cast<std::size_t>(e.v)] ^= bu;
      selected += added ? 1 : -1;
    }
    const WideCount c = chi3_rows(rows, &memo);
    if (c == 0) continue;
    ++contributing;
    auto& slot = partial[static_cast<std::size_t>(selected)];
    if (slot + c < slot) {
      spilled[static_cast<std::size_t>(selected)] += from_wide(slot);
      slot = 0;
    }
    slot += c;
  }

  BigInt numerator = 0;
  for (int k = 0; k <= m; ++k) {
    BigInt sum = spilled[static_cast<std::size_t>(k)] + from_wide(partial[static_cast<std::size_t>(k)]);
    if (sum.is_zero()) continue;
    sum <<= k;  // |(-2)^k| = 2^k
    numerator += (k % 2 == 0) ? sum : BigInt{-sum};
  }
  return {DyadicRational(std::move(numerator), scale_exponent(g)), Formula::definition, total,
          contributing};
}

InvariantValue phi_eulerian(const Graph& g, const Budgets& budgets) {
  const int n = g.order();
  check_budget(Formula::eulerian, budgets.vertex_budget, n);
  const auto adj = g.adjacency();

  // counts[k] = Σ over Eulerian U with |U| = k of (-1)^cut.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  Mask u = 0;
  Mask odd = 0;  // bit w set iff deg_U(w) is odd
  int cut = 0;
  int size = 0;
  std::uint64_t contributing = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step != 0) {
      const int v = std::countr_zero(step);
      const Mask nb = adj[static_cast<std::size_t>(v)];
      const int delta = std::popcount(nb) - 2 * std::popcount(nb & u);
      const Mask bit = Mask{1} << v;
      u ^= bit;
      if (u & bit) {
        cut += delta;
        ++size;
      } else {
        cut -= delta;
        --size;
      }
      odd ^= nb;
    }
    if ((u & odd) == 0) {
      counts[static_cast<std::size_t>(size)] += (cut & 1) ? -1 : 1;
      ++contributing;
    }
  }
  return {DyadicRational(weighted_sum(counts), scale_exponent(g)), Formula::eulerian, total,
          contributing};
}

InvariantValue psi_corank(const Graph& g, const Budgets& budgets) {
  const int n = g.order();
  check_budget(Formula::corank, budgets.vertex_budget, n);
  const auto adj = g.adjacency();

  // counts[e] = Σ over U with |U| + corank = e of (-1)^(n - |U|).
  std::vector<std::int64_t> counts(2 * static_cast<std::size_t>(n) + 1, 0);
  std::array<Mask, 64> scratch{};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < total; ++u) {
    // Rows of A(G|_U) without repacking: the dropped columns are all zero,
    // which leaves the rank unchanged.
    std::size_t dim = 0;
    for (Mask m = u; m != 0; m &= m - 1) scratch[dim++] = adj[static_cast<std::size_t>(std::countr_zero(m))] & u;
    const int r = eliminate_rank(std::span<Mask>(scratch.data(), dim));
    const int size = static_cast<int>(dim);
    const auto e = static_cast<std::size_t>(2 * size - r);
    counts[e] += ((n - size) % 2 != 0) ? -1 : 1;
  }
  return {DyadicRational(weighted_sum(counts), scale_exponent(g)), Formula::corank, total, total};
}

InvariantValue compute(Formula f, const Graph& g, const Budgets& budgets) {
  switch (f) {
    case Formula::definition: return phi_definition(g, budgets);
    case Formula::eulerian: return phi_eulerian(g, budgets);
    case Formula::corank: return psi_corank(g, budgets);
  }
  throw std::invalid_argument("unknown formula");
}

BigInt constrained_vector_count(const Graph& g, const VertexSubset& u) {
  if (u.width() != g.order()) throw GraphError("vertex subset width does not match graph");
  const Gf2Matrix a = adjacency_matrix(g, g.all_vertices());
  std::uint64_t count = 0;
  // Every x with supp(x) ⊆ U, via submask enumeration (x = U first, 0 last).
  for (Mask x = u.mask();; x = (x - 1) & u.mask()) {
    if (u.is_subset_of(zero_set(a, Gf2Vector(g.order(), x)))) ++count;
    if (x == 0) break;
  }
  return BigInt{count};
}

ParityWitness parity_witness(const Graph& g, const VertexSubset& u) {
  const Gf2Matrix a = adjacency_matrix(g, g.all_vertices());
  const Gf2Vector image = mat_vec(a, Gf2Vector::indicator(u));
  return {support(image).size(), cut_size(g, u)};
}

VertexSubset even_set(const Graph& g, const VertexSubset& u) {
  if (u.width() != g.order()) throw GraphError("vertex subset width does not match graph");
  Mask even = 0;
  for (int i = 0; i < g.order(); ++i)
    if (degree_in(g, i, u) % 2 == 0) even |= Mask{1} << i;
  return {g.order(), even};
}

}  // namespace graphweight

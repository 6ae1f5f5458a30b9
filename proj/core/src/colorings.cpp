#include "graphweight/colorings.hpp"

#include <array>
#include <bit>

namespace graphweight {

namespace {

constexpr std::array<WideCount, 65> kPow3 = [] {
  std::array<WideCount, 65> p{};
  p[0] = 1;
  for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i - 1] * 3;
  return p;
}();

// Components this small are cheaper to count than to hash.
constexpr int kMemoMinVertices = 4;

struct Backtracker {
  std::span<const Mask> adj;
  std::array<int, 64> order{};
  int length = 0;
  std::array<Mask, 3> coloured{};

  std::uint64_t count(int idx) noexcept {
    const Mask nb = adj[static_cast<std::size_t>(order[static_cast<std::size_t>(idx)])];
    const Mask self = Mask{1} << order[static_cast<std::size_t>(idx)];
    if (idx + 1 == length) {
      return static_cast<std::uint64_t>((nb & coloured[0]) == 0) +
             static_cast<std::uint64_t>((nb & coloured[1]) == 0) +
             static_cast<std::uint64_t>((nb & coloured[2]) == 0);
    }
    std::uint64_t total = 0;
    for (auto& cls : coloured) {
      if (nb & cls) continue;
      cls |= self;
      total += count(idx + 1);
      cls &= ~self;
    }
    return total;
  }
};

// Colourings of one connected component of the 2-core, all of whose
// vertices have degree >= 2 inside `component`. The first two vertices in
// BFS order are adjacent, so fixing their colours removes the 3! symmetry.
std::uint64_t count_component(std::span<const Mask> adj, Mask component, int root) noexcept {
  Backtracker bt{adj};
  Mask seen = Mask{1} << root;
  bt.order[0] = root;
  bt.length = 1;
  for (int head = 0; head < bt.length; ++head) {
    for (Mask m = adj[static_cast<std::size_t>(bt.order[static_cast<std::size_t>(head)])] &
                  component & ~seen;
         m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      seen |= Mask{1} << w;
      bt.order[static_cast<std::size_t>(bt.length++)] = w;
    }
  }
  bt.coloured[0] = Mask{1} << bt.order[0];
  bt.coloured[1] = Mask{1} << bt.order[1];
  return 6 * bt.count(2);
}

}  // namespace

Chi3Memo::Chi3Memo(const Graph& host, std::size_t max_entries) : max_entries_(max_entries) {
  const auto edges = host.edges();
  if (edges.size() > 64) throw GraphError("memo host has more than 64 edges");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edge_index_[static_cast<std::size_t>(edges[e].u)][static_cast<std::size_t>(edges[e].v)] =
        static_cast<std::uint8_t>(e);
    edge_index_[static_cast<std::size_t>(edges[e].v)][static_cast<std::size_t>(edges[e].u)] =
        static_cast<std::uint8_t>(e);
  }
}

WideCount chi3_rows(std::span<const Mask> adj, Chi3Memo* memo) {
  const int n = static_cast<int>(adj.size());
  Mask remaining = low_bits(n);
  WideCount product = 1;

  // A vertex with at most one remaining neighbour extends every colouring of
  // the rest in exactly 3 - deg ways, so it can be peeled off first. Degrees
  // are classified bit-parallel: `ones` = degree >= 1, `twos` = degree >= 2.
  // All low-degree vertices go in one round; two of them can only be
  // adjacent as an isolated edge, which contributes 3 * 2 = 6.
  for (;;) {
    Mask ones = 0;
    Mask twos = 0;
    for (Mask m = remaining; m != 0; m &= m - 1) {
      const Mask nb = adj[static_cast<std::size_t>(std::countr_zero(m))] & remaining;
      twos |= ones & nb;
      ones |= nb;
    }
    const Mask low = remaining & ~twos;
    if (low == 0) break;
    const Mask isolated = low & ~ones;
    Mask paired = 0;
    for (Mask m = low & ones; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (adj[static_cast<std::size_t>(v)] & low) paired |= Mask{1} << v;
    }
    const int pendant = std::popcount(low & ones & ~paired);
    // 6^(pairs) = 3^(pairs) * 2^(pairs), with pairs = |paired| / 2.
    const int threes = std::popcount(isolated) + std::popcount(paired) / 2;
    const int twos_exp = pendant + std::popcount(paired) / 2;
    product *= kPow3[static_cast<std::size_t>(threes)];
    product <<= twos_exp;
    remaining &= ~low;
  }

  while (remaining != 0) {
    const int root = std::countr_zero(remaining);
    Mask component = Mask{1} << root;
    for (Mask frontier = component; frontier != 0;) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1)
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & remaining & ~component;
      component |= frontier;
    }
    remaining &= ~component;

    Mask key = 0;
    const bool memoise = memo != nullptr && std::popcount(component) >= kMemoMinVertices;
    if (memoise) {
      for (Mask m = component; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        const auto& row = memo->edge_index_[static_cast<std::size_t>(v)];
        for (Mask w = adj[static_cast<std::size_t>(v)] & component & ~low_bits(v + 1); w != 0; w &= w - 1)
          key |= Mask{1} << row[static_cast<std::size_t>(std::countr_zero(w))];
      }
      if (const auto it = memo->table_.find(key); it != memo->table_.end()) {
        ++memo->hits_;
        if (it->second == 0) return 0;
        product *= it->second;
        continue;
      }
    }
    const std::uint64_t c = count_component(adj, component, root);
    if (memoise && memo->table_.size() < memo->max_entries_) memo->table_.emplace(key, c);
    if (c == 0) return 0;
    product *= c;
  }
  return product;
}

BigInt chi3(const Graph& g) {
  const WideCount c = chi3_rows(g.adjacency());
  BigInt out = static_cast<std::uint64_t>(c >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(c);
  return out;
}

}  // namespace graphweight

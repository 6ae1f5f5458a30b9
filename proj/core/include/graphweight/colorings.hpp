#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>

#include "graphweight/bigint.hpp"
#include "graphweight/graph.hpp"

namespace graphweight {

__extension__ using WideCount = unsigned __int128;

/// χ₃(G): the number of proper colourings V(G) -> {1, 2, 3}.
BigInt chi3(const Graph& g);

/// Remembers per-component colouring counts across many spanning subgraphs
/// of one host graph. A component is identified exactly by its edge set,
/// written as a mask over the host's edge indices.
class Chi3Memo {
 public:
  /// Host must have at most 64 edges.
  explicit Chi3Memo(const Graph& host, std::size_t max_entries = std::size_t{1} << 22);

  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
  [[nodiscard]] std::uint64_t hits() const noexcept { return hits_; }

 private:
  friend WideCount chi3_rows(std::span<const Mask> adj, Chi3Memo* memo);

  std::array<std::array<std::uint8_t, 64>, 64> edge_index_{};
  std::unordered_map<Mask, std::uint64_t> table_;
  std::size_t max_entries_;
  std::uint64_t hits_ = 0;
};

/// χ₃ of the graph given by symmetric, loop-free adjacency rows. 3^64 does
/// not fit, but every reachable count does: each component contributes at
/// most 3 * 2^(k-1) and the product is bounded by 3^64 < 2^102.
/// With a memo, `adj` must be a spanning subgraph of the memo's host.
WideCount chi3_rows(std::span<const Mask> adj, Chi3Memo* memo = nullptr);

}  // namespace graphweight

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphweight {

/// One machine word of vertex (or edge) membership bits.
using Mask = std::uint64_t;

/// Largest vertex count a Graph can hold: every adjacency row and vertex
/// subset is a single Mask.
inline constexpr int kMaxVertices = 64;

constexpr Mask low_bits(int width) noexcept {
  return width >= 64 ? ~Mask{0} : (Mask{1} << width) - 1;
}

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

/// Thrown when a Graph, subset, or matrix would violate its invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u;  // u < v
  int v;
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// U ⊆ V(G) as a bit mask of width n.
class VertexSubset {
 public:
  constexpr VertexSubset() = default;
  /// Throws GraphError if `mask` has bits at positions >= width.
  VertexSubset(int width, Mask mask);

  static VertexSubset empty(int width) { return {width, 0}; }
  static VertexSubset full(int width) { return {width, low_bits(width)}; }

  [[nodiscard]] constexpr int width() const noexcept { return width_; }
  [[nodiscard]] constexpr Mask mask() const noexcept { return mask_; }
  [[nodiscard]] constexpr int size() const noexcept { return popcount(mask_); }
  [[nodiscard]] constexpr bool contains(int i) const noexcept {
    return (mask_ >> i) & 1U;
  }
  [[nodiscard]] VertexSubset complement() const {
    return {width_, ~mask_ & low_bits(width_)};
  }
  [[nodiscard]] constexpr bool is_subset_of(const VertexSubset& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  [[nodiscard]] std::vector<int> members() const;

  friend constexpr bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  int width_ = 0;
  Mask mask_ = 0;
};

/// E' ⊆ E(G) as a bit mask over the graph's edge indices.
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  EdgeSubset(int width, Mask mask);

  [[nodiscard]] constexpr int width() const noexcept { return width_; }
  [[nodiscard]] constexpr Mask mask() const noexcept { return mask_; }
  [[nodiscard]] constexpr int size() const noexcept { return popcount(mask_); }

  friend constexpr bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  int width_ = 0;
  Mask mask_ = 0;
};

/// Simple undirected labeled graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit row per vertex. The edge list is kept in
/// lexicographic order of (min, max) endpoints, which fixes the index each
/// edge has inside an EdgeSubset.
class Graph {
 public:
  Graph() = default;
  /// Empty graph on n vertices. Throws GraphError if n is outside [0, 64].
  explicit Graph(int n);
  /// Throws GraphError on loops or out-of-range endpoints; duplicates collapse.
  Graph(int n, std::span<const Edge> edges);
  /// Builds from symmetric, loop-free adjacency rows; throws otherwise.
  static Graph from_adjacency(std::span<const Mask> rows);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(adj_.size()); }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] std::span<const Mask> adjacency() const noexcept { return adj_; }
  [[nodiscard]] Mask neighbours(int i) const { return adj_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] bool adjacent(int i, int j) const {
    return (neighbours(i) >> j) & 1U;
  }
  [[nodiscard]] int degree(int i) const { return popcount(neighbours(i)); }
  [[nodiscard]] VertexSubset all_vertices() const { return VertexSubset::full(order()); }

  /// Vertex i of the result is vertex perm[i] of this graph.
  [[nodiscard]] Graph relabelled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void rebuild_edges();

  std::vector<Mask> adj_;
  std::vector<Edge> edges_;
};

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// G|_U, relabelled 0..|U|-1 in increasing original order.
Graph induced_subgraph(const Graph& g, const VertexSubset& u);

/// G|_{E'}: same vertex set, only the selected edges.
Graph spanning_subgraph(const Graph& g, const EdgeSubset& ep);

/// |E(U, V \ U)|.
int cut_size(const Graph& g, const VertexSubset& u);

/// deg_U(i) = |N(i) ∩ U|.
int degree_in(const Graph& g, int i, const VertexSubset& u);

/// True iff every vertex of G|_U has even degree. Connectivity is not
/// required, and the empty set qualifies.
bool is_eulerian_induced(const Graph& g, const VertexSubset& u);

/// Parses the edge-list text format: a header line "n <count>" followed by
/// one "u v" pair per line (0-indexed). Blank lines are ignored.
Graph parse_edge_list(std::string_view text);

}  // namespace graphweight

#include "graphweight/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace graphweight {

namespace {

void check_width(int width, Mask mask, const char* what) {
  if (width < 0 || width > kMaxVertices)
    throw GraphError(std::string(what) + " width out of range: " + std::to_string(width));
  if ((mask & ~low_bits(width)) != 0)
    throw GraphError(std::string(what) + " has bits beyond its width");
}

}  // namespace

VertexSubset::VertexSubset(int width, Mask mask) : width_(width), mask_(mask) {
  check_width(width, mask, "vertex subset");
}

std::vector<int> VertexSubset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

EdgeSubset::EdgeSubset(int width, Mask mask) : width_(width), mask_(mask) {
  check_width(width, mask, "edge subset");
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count out of range: " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw GraphError("edge endpoint out of range: " + std::to_string(a) + " " +
                       std::to_string(b));
    if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
    adj_[static_cast<std::size_t>(a)] |= Mask{1} << b;
    adj_[static_cast<std::size_t>(b)] |= Mask{1} << a;
  }
  rebuild_edges();
}

Graph Graph::from_adjacency(std::span<const Mask> rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    const Mask row = rows[static_cast<std::size_t>(i)];
    if ((row & ~low_bits(n)) != 0) throw GraphError("adjacency row has bits beyond n");
    if ((row >> i) & 1U) throw GraphError("loop edge at vertex " + std::to_string(i));
    for (Mask m = row; m != 0; m &= m - 1) {
      const int j = std::countr_zero(m);
      if (((rows[static_cast<std::size_t>(j)] >> i) & 1U) == 0)
        throw GraphError("adjacency is not symmetric");
    }
    g.adj_[static_cast<std::size_t>(i)] = row;
  }
  g.rebuild_edges();
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.adj_[static_cast<std::size_t>(i)] = low_bits(n) & ~(Mask{1} << i);
  g.rebuild_edges();
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

void Graph::rebuild_edges() {
  edges_.clear();
  const int n = order();
  for (int i = 0; i < n; ++i) {
    // Only neighbours above i, so each edge is listed once as (min, max).
    for (Mask m = adj_[static_cast<std::size_t>(i)] & ~low_bits(i + 1); m != 0; m &= m - 1)
      edges_.push_back({i, std::countr_zero(m)});
  }
}

Graph Graph::relabelled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation has wrong length");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int p = perm[static_cast<std::size_t>(i)];
    if (p < 0 || p >= n || inverse[static_cast<std::size_t>(p)] != -1)
      throw GraphError("not a permutation");
    inverse[static_cast<std::size_t>(p)] = i;
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const auto& [a, b] : edges_)
    e.push_back({inverse[static_cast<std::size_t>(a)], inverse[static_cast<std::size_t>(b)]});
  return Graph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  std::vector<Edge> e(a.edges().begin(), a.edges().end());
  for (const auto& [u, v] : b.edges()) e.push_back({u + shift, v + shift});
  return Graph(a.order() + b.order(), e);
}

Graph induced_subgraph(const Graph& g, const VertexSubset& u) {
  if (u.width() != g.order()) throw GraphError("vertex subset width does not match graph");
  const auto members = u.members();
  std::vector<Mask> rows;
  rows.reserve(members.size());
  for (int original : members) {
    const Mask nb = g.neighbours(original) & u.mask();
    Mask packed = 0;
    for (std::size_t k = 0; k < members.size(); ++k)
      if ((nb >> members[k]) & 1U) packed |= Mask{1} << k;
    rows.push_back(packed);
  }
  return Graph::from_adjacency(rows);
}

Graph spanning_subgraph(const Graph& g, const EdgeSubset& ep) {
  if (ep.width() != g.size()) throw GraphError("edge subset width does not match graph");
  std::vector<Edge> kept;
  const auto edges = g.edges();
  for (Mask m = ep.mask(); m != 0; m &= m - 1)
    kept.push_back(edges[static_cast<std::size_t>(std::countr_zero(m))]);
  return Graph(g.order(), kept);
}

int cut_size(const Graph& g, const VertexSubset& u) {
  if (u.width() != g.order()) throw GraphError("vertex subset width does not match graph");
  const Mask outside = ~u.mask();
  int cut = 0;
  for (Mask m = u.mask(); m != 0; m &= m - 1)
    cut += popcount(g.neighbours(std::countr_zero(m)) & outside);
  return cut;
}

int degree_in(const Graph& g, int i, const VertexSubset& u) {
  if (u.width() != g.order()) throw GraphError("vertex subset width does not match graph");
  return popcount(g.neighbours(i) & u.mask());
}

bool is_eulerian_induced(const Graph& g, const VertexSubset& u) {
  if (u.width() != g.order()) throw GraphError("vertex subset width does not match graph");
  for (Mask m = u.mask(); m != 0; m &= m - 1)
    if (popcount(g.neighbours(std::countr_zero(m)) & u.mask()) % 2 != 0) return false;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on runs of blanks and parses every token as a non-negative int.
std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    long long value = 0;
    const auto token = line.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw GraphError("malformed edge list line " + std::to_string(line_no) + ": '" +
                       std::string(line) + "'");
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long long n = -1;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) continue;

    if (n < 0) {
      if (line.size() < 2 || line[0] != 'n' || (line[1] != ' ' && line[1] != '\t'))
        throw GraphError("edge list must start with 'n <count>'");
      const auto v = parse_ints(line.substr(1), line_no);
      if (v.size() != 1) throw GraphError("malformed header line: '" + std::string(line) + "'");
      n = v[0];
      if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count out of range: " + std::to_string(n));
      continue;
    }
    const auto v = parse_ints(line, line_no);
    if (v.size() != 2)
      throw GraphError("malformed edge list line " + std::to_string(line_no) + ": '" +
                       std::string(line) + "'");
    if (v[0] < 0 || v[1] < 0 || v[0] >= n || v[1] >= n)
      throw GraphError("vertex out of range on line " + std::to_string(line_no));
    if (v[0] == v[1]) throw GraphError("loop edge on line " + std::to_string(line_no));
    const int a = static_cast<int>(std::min(v[0], v[1]));
    const int b = static_cast<int>(std::max(v[0], v[1]));
    edges.push_back({a, b});
  }
  if (n < 0) throw GraphError("edge list must start with 'n <count>'");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace graphweight

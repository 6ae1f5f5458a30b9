#include <gtest/gtest.h>

#include "graphweight/graph.hpp"
#include "graphweight/random_graph.hpp"

namespace graphweight {
namespace {

Graph c4() { return Graph::cycle(4); }  // edges 01, 12, 23, 03

void expect_invariants(const Graph& g) {
  const int n = g.order();
  int degree_sum = 0;
  for (int i = 0; i < n; ++i) {
    EXPECT_FALSE(g.adjacent(i, i));
    EXPECT_EQ(g.neighbours(i) & ~low_bits(n), 0U);
    for (int j = 0; j < n; ++j) EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
    degree_sum += g.degree(i);
  }
  EXPECT_EQ(degree_sum, 2 * g.size());
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    EXPECT_LT(edges[e].u, edges[e].v);
    EXPECT_TRUE(g.adjacent(edges[e].u, edges[e].v));
    if (e > 0) EXPECT_LT(edges[e - 1], edges[e]);
  }
}

TEST(Graph, EdgesAreLexicographic) {
  const std::vector<Edge> input{{2, 3}, {1, 0}, {0, 2}, {3, 0}};
  const Graph g(4, input);
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {2, 3}};
  EXPECT_EQ(std::vector<Edge>(g.edges().begin(), g.edges().end()), expected);
  expect_invariants(g);
}

TEST(Graph, RejectsLoopsAndRange) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(2, loop), GraphError);
  const std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(Graph(3, far), GraphError);
  EXPECT_THROW(Graph(65), GraphError);
  const std::vector<Mask> asym{0b10, 0b00};
  EXPECT_THROW(Graph::from_adjacency(asym), GraphError);
}

TEST(VertexSubset, WidthInvariant) {
  EXPECT_THROW(VertexSubset(3, 0b1000), GraphError);
  EXPECT_NO_THROW(VertexSubset(64, ~Mask{0}));
  EXPECT_EQ(VertexSubset(4, 0b0101).complement().mask(), 0b1010U);
  EXPECT_THROW(EdgeSubset(2, 0b100), GraphError);
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(Graph::complete(3), VertexSubset(3, 0b011)), Graph::complete(2));
  EXPECT_EQ(induced_subgraph(c4(), VertexSubset::empty(4)).order(), 0);
  EXPECT_EQ(induced_subgraph(c4(), VertexSubset(4, 0b0111)), Graph::path(3));
}

TEST(InducedSubgraph, RelabelsInIncreasingOrder) {
  // Path 1-3 inside C4 ∪ {} : members {1, 3} are not adjacent in C4, {0, 2} neither.
  const std::vector<Edge> e{{1, 4}, {4, 2}};
  const Graph g(5, e);
  const Graph sub = induced_subgraph(g, VertexSubset(5, 0b10110));  // {1, 2, 4}
  const std::vector<Edge> expected{{0, 2}, {1, 2}};
  EXPECT_EQ(std::vector<Edge>(sub.edges().begin(), sub.edges().end()), expected);
}

TEST(SpanningSubgraph, Examples) {
  const Graph k3 = Graph::complete(3);
  EXPECT_EQ(spanning_subgraph(k3, EdgeSubset(3, 0)), Graph(3));
  EXPECT_EQ(spanning_subgraph(k3, EdgeSubset(3, 0b111)), k3);
  const Graph one = spanning_subgraph(k3, EdgeSubset(3, 0b001));
  EXPECT_EQ(one.size(), 1);
  EXPECT_TRUE(one.adjacent(0, 1));
  EXPECT_EQ(one.degree(2), 0);
  EXPECT_THROW(spanning_subgraph(k3, EdgeSubset(2, 0)), GraphError);
}

TEST(CutSize, Examples) {
  EXPECT_EQ(cut_size(Graph::complete(3), VertexSubset(3, 0b001)), 2);
  EXPECT_EQ(cut_size(c4(), VertexSubset::empty(4)), 0);
  EXPECT_EQ(cut_size(c4(), VertexSubset(4, 0b0101)), 4);
}

TEST(DegreeIn, Examples) {
  EXPECT_EQ(degree_in(Graph::complete(3), 0, VertexSubset(3, 0b110)), 2);
  EXPECT_EQ(degree_in(Graph::complete(3), 0, VertexSubset::empty(3)), 0);
  EXPECT_EQ(degree_in(c4(), 0, VertexSubset(4, 0b1010)), 2);
}

TEST(IsEulerianInduced, Examples) {
  EXPECT_TRUE(is_eulerian_induced(c4(), VertexSubset::empty(4)));
  EXPECT_TRUE(is_eulerian_induced(Graph::complete(3), VertexSubset::full(3)));
  EXPECT_FALSE(is_eulerian_induced(Graph::complete(3), VertexSubset(3, 0b011)));
  // Two disjoint triangles: not connected, still Eulerian.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  EXPECT_TRUE(is_eulerian_induced(Graph(6, e), VertexSubset::full(6)));
}

TEST(ParseEdgeList, Examples) {
  EXPECT_EQ(parse_edge_list("n 2\n0 1"), Graph::complete(2));
  const Graph g = parse_edge_list("n 3\n0 1\n1 0");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 1);
  EXPECT_THROW(parse_edge_list("n 1\n0 0"), GraphError);
}

TEST(ParseEdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("n 2\n0 2"), GraphError);
  EXPECT_THROW(parse_edge_list("n 2\n0"), GraphError);
  EXPECT_THROW(parse_edge_list("n 2\n0 x"), GraphError);
  EXPECT_THROW(parse_edge_list("0 1"), GraphError);
  EXPECT_THROW(parse_edge_list(""), GraphError);
  EXPECT_THROW(parse_edge_list("n -1"), GraphError);
  EXPECT_EQ(parse_edge_list("n 1").order(), 1);
  EXPECT_EQ(parse_edge_list("n 3\r\n\n 0 2 \r\n").size(), 1);
}

class GraphProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GraphProperties, CutHandshakeAndEdgeContributions) {
  const std::uint64_t seed = GetParam();
  const int n = 1 + static_cast<int>(splitmix64_at(seed, 999) % 16);
  const Graph g = random_graph(n, Probability{1, 2}, seed);
  expect_invariants(g);

  int handshake = 0;
  for (int i = 0; i < n; ++i) handshake += degree_in(g, i, g.all_vertices());
  EXPECT_EQ(handshake, 2 * g.size());

  for (int s = 0; s < 32; ++s) {
    const VertexSubset u(n, splitmix64_at(seed ^ 0xABCDEF, static_cast<std::uint64_t>(s)) & low_bits(n));
    EXPECT_EQ(cut_size(g, u), cut_size(g, u.complement()));

    int deg_sum = 0;
    for (int i = 0; i < n; ++i) deg_sum += degree_in(g, i, u);
    const Graph sub = induced_subgraph(g, u);
    expect_invariants(sub);
    EXPECT_EQ(deg_sum, 2 * sub.size() + cut_size(g, u));

    const EdgeSubset ep(g.size(), splitmix64_at(seed, 500 + static_cast<std::uint64_t>(s)) & low_bits(g.size()));
    const Graph span = spanning_subgraph(g, ep);
    expect_invariants(span);
    EXPECT_EQ(span.size(), ep.size());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeded, GraphProperties, ::testing::Range<std::uint64_t>(1, 41));

}  // namespace
}  // namespace graphweight

#include <gtest/gtest.h>

#include <random>

#include "sigswitch/graph.hpp"
#include "support/oracles.hpp"

namespace sigswitch {
namespace {

using ::sigswitch::testing::encode_graph6;

TEST(CompleteGraph, EdgeCounts) {
  EXPECT_EQ(complete_graph(1).size(), 0u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_THROW(complete_graph(0), std::invalid_argument);
}

TEST(CompleteGraph, LexicographicEdgeOrder) {
  const Graph k3 = complete_graph(3);
  ASSERT_EQ(k3.size(), 3u);
  EXPECT_EQ(k3.edge(0), (Edge{0, 1}));
  EXPECT_EQ(k3.edge(1), (Edge{0, 2}));
  EXPECT_EQ(k3.edge(2), (Edge{1, 2}));
  EXPECT_EQ(k3.edge_index(2, 1), 2u);
  EXPECT_EQ(k3.edge_index(1, 2), 2u);
}

TEST(Graph, RejectsLoopsAndMultiEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), ParseError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ParseError);
  EXPECT_THROW(Graph(3, {{0, 3}}), ParseError);
}

TEST(Graph, EdgesNormalizedAndSorted) {
  const Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
  EXPECT_FALSE(g.edge_index(1, 3).has_value());
}

TEST(GeneralizedPetersen, Sizes) {
  const Graph g72 = generalized_petersen(7, 2);
  EXPECT_EQ(g72.order(), 14u);
  EXPECT_EQ(g72.size(), 21u);
  const Graph petersen = generalized_petersen(5, 2);
  EXPECT_EQ(petersen.order(), 10u);
  EXPECT_EQ(petersen.size(), 15u);
  EXPECT_THROW(generalized_petersen(4, 2), std::invalid_argument);
  EXPECT_THROW(generalized_petersen(7, 0), std::invalid_argument);
  EXPECT_THROW(generalized_petersen(2, 1), std::invalid_argument);
}

TEST(GeneralizedPetersen, CubicForAllValidParameters) {
  for (std::size_t n = 3; n <= 16; ++n) {
    for (std::size_t k = 1; k <= (n - 1) / 2; ++k) {
      const Graph g = generalized_petersen(n, k);
      EXPECT_EQ(g.size(), 3 * n);
      for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.degree(v), 3u) << n << "," << k;
    }
  }
}

TEST(GeneralizedPetersen, VertexFlattening) {
  const GpVertex v{1, 4};
  EXPECT_EQ(v.flat(7), 11u);
  EXPECT_EQ(GpVertex::from_flat(11, 7), v);
  const Graph g = generalized_petersen(7, 2);
  EXPECT_TRUE(g.adjacent(GpVertex{0, 6}.flat(7), GpVertex{0, 0}.flat(7)));
  EXPECT_TRUE(g.adjacent(GpVertex{1, 6}.flat(7), GpVertex{1, 1}.flat(7)));
  EXPECT_TRUE(g.adjacent(GpVertex{0, 3}.flat(7), GpVertex{1, 3}.flat(7)));
}

TEST(Graph6, DecodesK5) {
  // Ten 1-bits in two bytes: 111111 -> '~', 1111 + 00 padding -> '{'.
  EXPECT_EQ(parse_graph6("D~{"), complete_graph(5));
  EXPECT_EQ(encode_graph6(complete_graph(5)), "D~{");
}

TEST(Graph6, TwoVertexForms) {
  const Graph empty = parse_graph6("A?");
  EXPECT_EQ(empty.order(), 2u);
  EXPECT_EQ(empty.size(), 0u);
  // '_' carries a leading 1 bit: the single pair (0,1) is an edge.
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.size(), 1u);
}

TEST(Graph6, HeaderAndWhitespace) {
  EXPECT_EQ(parse_graph6(">>graph6<<D~{\n"), complete_graph(5));
  EXPECT_EQ(parse_graph6("  D~{  "), complete_graph(5));
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("   \n"), ParseError);
  EXPECT_THROW(parse_graph6("D~"), ParseError);       // truncated
  EXPECT_THROW(parse_graph6("D~{?"), ParseError);     // trailing byte
  EXPECT_THROW(parse_graph6("D~\x7f"), ParseError);   // out of range
  EXPECT_THROW(parse_graph6("D~ "), ParseError);      // out of range
  EXPECT_THROW(parse_graph6("D~|"), ParseError);      // nonzero padding
  EXPECT_THROW(parse_graph6("~?@d"), ParseError);     // long form
}

TEST(Graph6, RoundTripsGeneratedFamilies) {
  std::vector<Graph> graphs = {complete_graph(1), complete_graph(7), path_graph(9),
                               cycle_graph(12), generalized_petersen(7, 2),
                               generalized_petersen(5, 2), generalized_petersen(13, 5),
                               empty_graph(62)};
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) edges.push_back({u, v});
      }
    }
    graphs.emplace_back(n, edges);
  }
  for (const auto& g : graphs) EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
}

TEST(Components, Counts) {
  EXPECT_EQ(connected_components(complete_graph(5)).count, 1u);
  const auto two = connected_components(parse_graph6(encode_graph6(
      Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}))));
  EXPECT_EQ(two.count, 2u);
  EXPECT_EQ(two.labels, (std::vector<std::size_t>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(connected_components(empty_graph(4)).count, 4u);
  EXPECT_EQ(connected_components(Graph()).count, 0u);
}

TEST(VertexCut, Examples) {
  const Graph k5 = complete_graph(5);
  EXPECT_TRUE(vertex_cut_edges(k5, std::vector<bool>(5, false)).none());
  const auto star = vertex_cut_edges(k5, {0});
  EXPECT_EQ(star.set_indices(), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(vertex_cut_edges(k5, {0, 1}).popcount(), 6u);
}

TEST(VertexCut, ComplementAndLinearity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() & 1) edges.push_back({u, v});
      }
    }
    const Graph g(n, edges);
    std::vector<bool> s(n), t(n), sym(n), comp(n);
    for (std::size_t v = 0; v < n; ++v) {
      s[v] = rng() & 1;
      t[v] = rng() & 1;
      sym[v] = s[v] != t[v];
      comp[v] = !s[v];
    }
    EXPECT_EQ(vertex_cut_edges(g, s), vertex_cut_edges(g, comp));
    EXPECT_EQ(vertex_cut_edges(g, sym), vertex_cut_edges(g, s) ^ vertex_cut_edges(g, t));
  }
}

}  // namespace
}  // namespace sigswitch

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "boxkit/graph.hpp"
#include "support.hpp"

using namespace boxkit;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Graph, BasicQueries) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 1}, {2, 3}});
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(g.degree(2), 2u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), Error);
}

TEST(Graph, SplitEdgeAddsOneVertexTwoEdges) {
  const Graph k2 = complete_graph(2);
  auto [g, w] = split_edge(k2, 0, 1);
  EXPECT_EQ(w, 2);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(w, 0));
  EXPECT_TRUE(g.adjacent(w, 1));
  EXPECT_THROW(split_edge(g, 0, 0), Error);
}

TEST(Graph, SplitNonEdgeFails) {
  const Graph p3 = path_graph(3);
  try {
    split_edge(p3, 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_an_edge);
  }
}

TEST(Graph, SplitInvariantsUnderRandomSequences) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = complete_graph(2);
    for (int step = 0; step < 30; ++step) {
      const auto edges = g.edges();
      const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      const int n = g.n();
      const std::size_t m = g.m();
      auto [next, w] = split_edge(g, e.first, e.second);
      ASSERT_EQ(next.n(), n + 1);
      ASSERT_EQ(next.m(), m + 2);
      ASSERT_EQ(next.degree(w), 2u);
      g = next;
    }
    EXPECT_TRUE(is_2_tree(g));
    EXPECT_TRUE(is_series_parallel(g));
    EXPECT_EQ(static_cast<long long>(g.m()), 2LL * g.n() - 3);
  }
}

TEST(Graph, PendantAndSeries) {
  auto [g, z] = add_pendant(complete_graph(3), 0);
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 4u);
  EXPECT_EQ(g.degree(z), 1u);
  auto [h, w] = series_subdivide(complete_graph(3), 0, 1);
  EXPECT_EQ(h.n(), 4);
  EXPECT_EQ(h.m(), 4u);
  EXPECT_FALSE(h.adjacent(0, 1));
  EXPECT_TRUE(h.adjacent(0, w) && h.adjacent(w, 1));
}

TEST(Graph, SeriesParallelRecognition) {
  EXPECT_TRUE(is_series_parallel(cycle_graph(4)));
  EXPECT_TRUE(is_series_parallel(path_graph(6)));
  EXPECT_TRUE(is_series_parallel(complete_graph(3)));
  EXPECT_FALSE(is_series_parallel(complete_graph(4)));
  EXPECT_FALSE(is_series_parallel(complete_graph(5)));
  // K_{2,3} is series-parallel.
  EXPECT_TRUE(is_series_parallel(Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));
  // K4 subdivided is still not.
  auto [sub, w] = series_subdivide(complete_graph(4), 0, 1);
  (void)w;
  EXPECT_FALSE(is_series_parallel(sub));
}

TEST(Graph, TwoTreeRecognition) {
  EXPECT_FALSE(is_2_tree(complete_graph(2)));  // a 2-tree starts from a triangle
  EXPECT_TRUE(is_2_tree(complete_graph(3)));
  EXPECT_FALSE(is_2_tree(cycle_graph(4)));
  EXPECT_FALSE(is_2_tree(complete_graph(4)));
  EXPECT_FALSE(is_2_tree(path_graph(3)));
  // Two triangles sharing an edge.
  EXPECT_TRUE(is_2_tree(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}})));
}

TEST(Graph, Components) {
  const Graph g = Graph::from_edges(5, {{0, 1}, {3, 4}});
  EXPECT_EQ(connected_components(g).size(), 3u);
  EXPECT_TRUE(is_complete(complete_graph(5)));
  EXPECT_FALSE(is_complete(path_graph(3)));
}

TEST(Graph, Labels) {
  Graph g = path_graph(3).with_label("a", 0).with_label("b", 2);
  EXPECT_EQ(g.at("b"), 2);
  EXPECT_EQ(g.display_name(1), "1");
  EXPECT_EQ(g.display_name(0), "a");
  EXPECT_THROW(g.with_label("a", 1), Error);
  EXPECT_THROW(g.with_label("has space", 1), Error);
  EXPECT_THROW(g.at("zz"), Error);
}

TEST(GraphFormat, ParseAndSerialize) {
  const std::string text = "# label a 0\n3 2\n0 1\n1 2\n";
  const Graph g = parse_graph(text);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.at("a"), 0);
  EXPECT_EQ(serialize_graph(g), text);
}

TEST(GraphFormat, ErrorCodes) {
  EXPECT_EQ(parse_error(""), ErrorCode::malformed_header);
  EXPECT_EQ(parse_error("3\n"), ErrorCode::malformed_header);
  EXPECT_EQ(parse_error("x 1\n"), ErrorCode::malformed_header);
  EXPECT_EQ(parse_error("3 1\n0\n"), ErrorCode::malformed_edge);
  EXPECT_EQ(parse_error("3 1\n0 7\n"), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(parse_error("3 1\n1 1\n"), ErrorCode::self_loop);
  EXPECT_EQ(parse_error("3 2\n0 1\n1 0\n"), ErrorCode::duplicate_edge);
  EXPECT_EQ(parse_error("3 2\n0 1\n"), ErrorCode::edge_count_mismatch);
  EXPECT_EQ(parse_error("3 1\n0 1\n1 2\n"), ErrorCode::edge_count_mismatch);
  EXPECT_EQ(parse_error("# label a x\n3 0\n"), ErrorCode::bad_label);
  EXPECT_EQ(parse_error("# label a 9\n3 0\n"), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(parse_error("# label a 0\n# label a 1\n3 0\n"), ErrorCode::bad_label);
}

TEST(GraphFormat, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    Graph g = testing_support::random_graph(rng, n, std::uniform_real_distribution<double>(0, 1)(rng));
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) g = g.with_label("v" + std::to_string(v) + "_" + std::to_string(rng() % 100), v);
    const Graph back = parse_graph(serialize_graph(g));
    ASSERT_EQ(back, g) << serialize_graph(g);
    ASSERT_EQ(serialize_graph(back), serialize_graph(g));
  }
}

#include <gtest/gtest.h>

#include <random>

#include "boxkit/encoding.hpp"
#include "boxkit/sat.hpp"
#include "support.hpp"

using namespace boxkit;
namespace ts = testing_support;

namespace {

sat::Result solve(const sat::Cnf& cnf, sat::Solver& s) {
  s.load(cnf);
  return s.solve();
}

Relation before_relation(const BoxRepresentation& rep, int i) {
  Relation r(rep.size());
  for (Vertex u = 0; u < rep.size(); ++u)
    for (Vertex v = 0; v < rep.size(); ++v)
      if (rep[u][i].hi < rep[v][i].lo) r.set(u, v);
  return r;
}

}  // namespace

TEST(EndpointOrder, ExtractRealizeRoundTrip) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8), d = 1 + static_cast<int>(rng() % 3);
    const auto rep = ts::random_rep(rng, n, d, 12);
    const auto orders = extract_orders(rep);
    const auto back = realize(orders, n);
    ASSERT_EQ(extract_orders(back), orders);
    ASSERT_EQ(ts::graph_of(back), ts::graph_of(rep));
  }
}

TEST(EndpointOrder, RealizeRejectsReversedInterval) {
  EndpointOrder o{{1, 0}};
  EXPECT_THROW(realize(std::vector<EndpointOrder>{o}, 1), Error);
  EXPECT_THROW(realize(std::vector<EndpointOrder>{EndpointOrder{{0}}}, 1), Error);
  EXPECT_EQ(parse_token(token_name(right_token(7))), right_token(7));
  EXPECT_THROW(parse_token("Q3"), Error);
}

TEST(EndpointOrder, DenseRanks) {
  EXPECT_EQ(dense(EndpointOrder{{5, 5, 9, 2}}).rank, (std::vector<int>{1, 1, 2, 0}));
}

// Every concrete representation must be accepted by the endpoint encoding
// once its orders are pinned, together with exactly the side constraints it
// satisfies; pinning it with a constraint it violates must be refuted.
TEST(EndpointEncoding, SnappingCompleteness) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 600; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int d = t % 3 == 0 ? 1 + static_cast<int>(rng() % 3) : 2;
    const auto rep = ts::random_rep(rng, n, d, 6);
    const Graph g = ts::graph_of(rep);
    std::vector<SideConstraint> holding, failing;
    if (d == 2)
      for (int c = 0; c < 6; ++c) {
        const auto sc = ts::random_constraint(rng, n);
        (ts::naive::satisfies(rep, sc) ? holding : failing).push_back(sc);
      }
    const auto orders = extract_orders(rep);
    {
      sat::Cnf cnf;
      EndpointEncoding enc(g, d, holding, cnf);
      for (int i = 0; i < d; ++i) enc.fix_order(i, orders[i], cnf);
      sat::Solver s;
      ASSERT_EQ(solve(cnf, s), sat::Result::sat) << serialize_representation(rep);
      const auto decoded = enc.decode([&](Lit l) { return s.model_true(l); });
      for (int i = 0; i < d; ++i) ASSERT_EQ(dense(decoded[i]), dense(orders[i]));
    }
    for (const auto& bad : failing) {
      auto cons = holding;
      cons.push_back(bad);
      sat::Cnf cnf;
      EndpointEncoding enc(g, d, cons, cnf);
      for (int i = 0; i < d; ++i) enc.fix_order(i, orders[i], cnf);
      sat::Solver s;
      ASSERT_EQ(solve(cnf, s), sat::Result::unsat) << to_text(bad) << "\n" << serialize_representation(rep);
    }
  }
}

TEST(EndpointEncoding, DecodedModelsRealize) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const Graph g = ts::random_graph(rng, 6, 0.5);
    sat::Cnf cnf;
    EndpointEncoding enc(g, 2, {}, cnf);
    sat::Solver s;
    if (solve(cnf, s) != sat::Result::sat) continue;
    const auto rep = realize(enc.decode([&](Lit l) { return s.model_true(l); }), g.n());
    ASSERT_TRUE(verify_representation(g, rep).ok());
  }
}

TEST(EndpointEncoding, SortedChainIsEnforced) {
  const Graph g = Graph::from_edges(3, {});
  sat::Cnf cnf;
  EndpointOptions opts;
  opts.sorted_left_ends = {{2, 1, 0}};
  EndpointEncoding enc(g, 1, {}, cnf, opts);
  sat::Solver s;
  ASSERT_EQ(solve(cnf, s), sat::Result::sat);
  const auto rep = realize(enc.decode([&](Lit l) { return s.model_true(l); }), 3);
  EXPECT_LE(rep[2][0].lo, rep[1][0].lo);
  EXPECT_LE(rep[1][0].lo, rep[0][0].lo);
}

TEST(IntervalOrder, RealizeFromIntervals) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 500; ++t) {
    const auto rep = ts::random_rep(rng, 1 + static_cast<int>(rng() % 12), 1, 15);
    const Relation r = before_relation(rep, 0);
    ASSERT_TRUE(is_interval_order(r));
    const auto iv = realize_interval_order(r);
    for (Vertex u = 0; u < rep.size(); ++u)
      for (Vertex v = 0; v < rep.size(); ++v)
        if (u != v) ASSERT_EQ(iv[u].hi < iv[v].lo, r.has(u, v));
  }
}

TEST(IntervalOrder, TwoPlusTwoDetected) {
  Relation r(4);
  r.set(0, 1);
  r.set(2, 3);
  EXPECT_FALSE(is_interval_order(r));
  const auto v = two_plus_two_violations(r, 0, 100);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_THROW(realize_interval_order(r), Error);
  // Adding 0 < 3 repairs it.
  r.set(0, 3);
  EXPECT_TRUE(is_interval_order(r));
  // A non-transitive chain is a violation too.
  Relation chain(3);
  chain.set(0, 1);
  chain.set(1, 2);
  EXPECT_FALSE(is_interval_order(chain));
}

TEST(BeforeEncoding, EdgesFoldToFalse) {
  const Graph g = path_graph(3);
  sat::Cnf cnf;
  BeforeEncoding enc(g, 1, cnf);
  EXPECT_FALSE(enc.before(0, 0, 1));
  EXPECT_FALSE(enc.before(0, 1, 0));
  EXPECT_TRUE(enc.before(0, 0, 2));
  EXPECT_FALSE(enc.before(0, 1, 1));
  EXPECT_EQ(enc.var_map().size(), 2u);
}

TEST(BeforeEncoding, ConcreteRelationsAreModels) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6), d = 1 + static_cast<int>(rng() % 2);
    const auto rep = ts::random_rep(rng, n, d, 8);
    const Graph g = ts::graph_of(rep);
    sat::Cnf cnf;
    BeforeEncoding enc(g, d, cnf);
    enc.add_all_axioms(cnf, 1'000'000);
    for (int i = 0; i < d; ++i) {
      const Relation r = before_relation(rep, i);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (auto b = enc.before(i, u, v)) cnf.add({r.has(u, v) ? *b : ~*b});
    }
    sat::Solver s;
    ASSERT_EQ(solve(cnf, s), sat::Result::sat) << serialize_representation(rep);
    const auto back = realize_relations(enc.decode([&](Lit l) { return s.model_true(l); }), n);
    ASSERT_TRUE(verify_representation(g, back).ok());
  }
}

TEST(BeforeEncoding, EagerCapIsEnforced) {
  const Graph g = Graph::from_edges(20, {});
  sat::Cnf cnf;
  BeforeEncoding enc(g, 2, cnf);
  EXPECT_THROW(enc.add_all_axioms(cnf, 1000), Error);
}

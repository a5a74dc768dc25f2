#include <gtest/gtest.h>

#include "boxkit/gadgets.hpp"

using namespace boxkit;

namespace {

struct Counts {
  GadgetName name;
  int k;
  int n;
  std::size_t m;
};

}  // namespace

TEST(Gadgets, CountsMatchRecipe) {
  // n and m follow from the recipes: every split adds one vertex and two
  // edges, the pendant adds one of each.
  const std::vector<Counts> expected{
      {GadgetName::L1, 5, 4, 4},        {GadgetName::L2, 5, 5, 7},
      {GadgetName::L3, 5, 17, 31},      {GadgetName::L4, 5, 22, 41},
      {GadgetName::G, 5, 157, 311},     {GadgetName::L3, 1, 5, 7},
      {GadgetName::L4, 2, 10, 17},      {GadgetName::G, 1, 9, 15},
      {GadgetName::G, 3, 59, 115},
  };
  for (const auto& c : expected) {
    const Graph g = build_gadget({c.name, c.k});
    EXPECT_EQ(g.n(), c.n) << to_string(c.name) << " k=" << c.k;
    EXPECT_EQ(g.m(), c.m) << to_string(c.name) << " k=" << c.k;
  }
  for (int k = 1; k <= 7; ++k) {
    EXPECT_EQ(build_gadget({GadgetName::L3, k}).n(), 2 + 3 * k);
    EXPECT_EQ(build_gadget({GadgetName::L4, k}).n(), 2 + 4 * k);
    EXPECT_EQ(build_gadget({GadgetName::G, k}).n(), 2 + k + 6 * k * k);
  }
}

TEST(Gadgets, ClassMembership) {
  for (GadgetName n : {GadgetName::L2, GadgetName::L3, GadgetName::L4, GadgetName::G}) {
    const Graph g = build_gadget({n, 5});
    EXPECT_TRUE(is_2_tree(g)) << to_string(n);
    EXPECT_TRUE(is_series_parallel(g)) << to_string(n);
    EXPECT_EQ(static_cast<long long>(g.m()), 2LL * g.n() - 3) << to_string(n);
  }
  const Graph l1 = build_gadget({GadgetName::L1});
  EXPECT_TRUE(is_series_parallel(l1));
  EXPECT_FALSE(is_2_tree(l1));
}

TEST(Gadgets, ConstructionOrderIsFixed) {
  const Graph g = build_gadget({GadgetName::G, 2});
  const std::vector<std::string> order{"a",    "b",    "c1",   "c2",   "d1_1", "d1_2", "e1_1", "e1_2",
                                       "d2_1", "d2_2", "e2_1", "e2_2", "p1_1", "q1_1", "r1_1", "s1_1"};
  for (std::size_t v = 0; v < order.size(); ++v) EXPECT_EQ(g.at(order[v]), static_cast<Vertex>(v)) << order[v];
  EXPECT_EQ(build_gadget({GadgetName::G, 2}), g);
}

TEST(Gadgets, LabelledRoles) {
  const Graph l4 = build_gadget({GadgetName::L4, 3});
  for (int i = 1; i <= 3; ++i) {
    const Vertex c = l4.at(role("c", i)), x = l4.at(role("x", i)), y = l4.at(role("y", i)), z = l4.at(role("z", i));
    EXPECT_TRUE(l4.adjacent(c, l4.at("a")) && l4.adjacent(c, l4.at("b")));
    EXPECT_TRUE(l4.adjacent(x, l4.at("a")) && l4.adjacent(x, c));
    EXPECT_TRUE(l4.adjacent(y, l4.at("b")) && l4.adjacent(y, c));
    EXPECT_TRUE(l4.adjacent(z, x) && l4.adjacent(z, c));
    EXPECT_EQ(l4.degree(z), 2u);
  }
  const Graph l1 = build_gadget({GadgetName::L1});
  EXPECT_EQ(l1.degree(l1.at("z")), 1u);
  EXPECT_TRUE(l1.adjacent(l1.at("z"), l1.at("c")));
}

TEST(Gadgets, NameParsing) {
  EXPECT_EQ(parse_gadget_name("L3"), GadgetName::L3);
  EXPECT_THROW(parse_gadget_name("L5"), Error);
  EXPECT_THROW(build_gadget({GadgetName::L3, 0}), Error);
}

TEST(Gadgets, EmbeddingsInG) {
  for (int k : {1, 3, 5}) {
    const Graph g = build_gadget({GadgetName::G, k});
    std::string why;
    EXPECT_TRUE(embedding_is_isomorphism(g, embedded_subgadget(g, k, {GadgetName::L4, 1, Side::a_side}), &why)) << why;
    for (int i = 1; i <= k; ++i)
      for (Side s : {Side::a_side, Side::b_side}) {
        const auto emb = embedded_subgadget(g, k, {GadgetName::L3, i, s});
        EXPECT_TRUE(embedding_is_isomorphism(g, emb, &why)) << emb.description << ": " << why;
      }
  }
}

TEST(Gadgets, BrokenEmbeddingIsCaught) {
  const Graph g = build_gadget({GadgetName::G, 5});
  auto emb = embedded_subgadget(g, 5, {GadgetName::L3, 2, Side::a_side});
  // Send x1 to the wrong side of the fan.
  const Graph l3 = build_gadget({GadgetName::L3, 5});
  emb.vertices[l3.at("x1")] = g.at("r2_1");
  std::string why;
  EXPECT_FALSE(embedding_is_isomorphism(g, emb, &why));
  EXPECT_NE(why.find("x1"), std::string::npos) << why;

  auto dup = embedded_subgadget(g, 5, {GadgetName::L4, 1, Side::a_side});
  dup.vertices[0] = dup.vertices[1];
  EXPECT_FALSE(embedding_is_isomorphism(g, dup, &why));
  EXPECT_THROW(embedded_subgadget(g, 5, {GadgetName::L3, 6, Side::a_side}), Error);
}

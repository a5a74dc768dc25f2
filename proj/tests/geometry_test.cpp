#include <gtest/gtest.h>

#include <random>

#include "boxkit/geometry.hpp"
#include "support.hpp"

using namespace boxkit;
namespace naive = testing_support::naive;

namespace {

Box rect(Coord l1, Coord r1, Coord l2, Coord r2) { return Box{{l1, r1}, {l2, r2}}; }

constexpr int kTriples = 100000;

}  // namespace

TEST(Interval, Basics) {
  const Interval a{1, 4}, b{4, 6}, c{5, 5};
  EXPECT_TRUE(a.overlaps(b));
  EXPECT_FALSE(a.overlaps(c));
  EXPECT_TRUE(b.contains(c));
  EXPECT_EQ(*intersect(a, b), (Interval{4, 4}));
  EXPECT_FALSE(intersect(a, c));
  EXPECT_TRUE(interval_in_union({2, 6}, a, b));
  EXPECT_FALSE(interval_in_union({0, 6}, a, b));
  EXPECT_FALSE(interval_in_union({1, 6}, {1, 3}, b));
}

TEST(Box, PredicatesOnFixedCases) {
  const Box a = rect(0, 4, 0, 4), b = rect(2, 6, 2, 6), c = rect(5, 7, 5, 7);
  EXPECT_TRUE(boxes_intersect(a, b));
  EXPECT_FALSE(boxes_intersect(a, c));
  EXPECT_TRUE(box_contains(a, rect(1, 2, 1, 2)));
  EXPECT_EQ(*intersect(a, b), rect(2, 4, 2, 4));
  // Touching corners intersect: boxes are closed.
  EXPECT_TRUE(boxes_intersect(rect(0, 1, 0, 1), rect(1, 2, 1, 2)));
  EXPECT_THROW(boxes_intersect(a, Box{{0, 1}}), Error);
}

TEST(Box, CornerPoints) {
  const auto cp = corner_points(rect(0, 4, 0, 4), rect(2, 6, 1, 3));
  EXPECT_EQ(cp.l1, 2);
  EXPECT_EQ(cp.r1, 4);
  EXPECT_EQ(cp.l2, 1);
  EXPECT_EQ(cp.r2, 3);
  EXPECT_THROW(corner_points(rect(0, 1, 0, 1), rect(3, 4, 3, 4)), Error);
}

TEST(Box, CrossingPairs) {
  // A plus sign: tall thin bar and wide flat bar.
  EXPECT_TRUE(is_crossing_pair(rect(2, 3, 0, 6), rect(0, 6, 2, 3)));
  EXPECT_FALSE(is_crossing_pair(rect(0, 3, 0, 3), rect(2, 5, 2, 5)));
  // Nested boxes do not cross unless the sides coincide.
  EXPECT_FALSE(is_crossing_pair(rect(0, 6, 0, 6), rect(1, 2, 1, 2)));
  EXPECT_TRUE(is_crossing_pair(rect(0, 6, 0, 6), rect(0, 6, 1, 2)));
}

TEST(Box, GridOracleAgreement) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < kTriples; ++t) {
    const Box c = testing_support::random_box(rng, 2, 6), a = testing_support::random_box(rng, 2, 6),
              b = testing_support::random_box(rng, 2, 6);
    ASSERT_EQ(boxes_intersect(a, b), naive::meet(a, b));
    ASSERT_EQ(box_diff_hits(c, a, b), naive::diff_hits(c, a, b));
    ASSERT_EQ(box_in_union(c, a, b), naive::in_union(c, a, b));
    ASSERT_EQ(intersection_contained(c, a, b), naive::cap_contained(c, a, b));
    ASSERT_EQ(contains_corner_of(c, a, b), naive::holds_corner(c, a, b));
    ASSERT_EQ(is_crossing_pair(a, b), naive::crossing(a, b));
  }
}

TEST(Box, HellyWitness) {
  std::mt19937_64 rng(12);
  int triangles = 0;
  for (int t = 0; t < kTriples; ++t) {
    const Box x = testing_support::random_box(rng, 2, 8), y = testing_support::random_box(rng, 2, 8),
              z = testing_support::random_box(rng, 2, 8);
    const bool pairwise = naive::meet(x, y) && naive::meet(y, z) && naive::meet(x, z);
    const auto w = helly_witness(x, y, z);
    ASSERT_EQ(w.has_value(), pairwise);
    if (!pairwise) continue;
    ++triangles;
    ASSERT_TRUE(x.contains(*w) && y.contains(*w) && z.contains(*w));
    ASSERT_TRUE(naive::common_point(x, y, z));
  }
  EXPECT_GT(triangles, 1000);
}

TEST(Box, HellyHoldsInHigherDimensions) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20000; ++t) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const Box x = testing_support::random_box(rng, d, 6), y = testing_support::random_box(rng, d, 6),
              z = testing_support::random_box(rng, d, 6);
    if (auto w = helly_witness(x, y, z)) ASSERT_TRUE(x.contains(*w) && y.contains(*w) && z.contains(*w));
  }
}

TEST(Representation, Verify) {
  const Graph p3 = path_graph(3);
  BoxRepresentation good(1, {Box{{0, 1}}, Box{{1, 2}}, Box{{2, 3}}});
  EXPECT_TRUE(verify_representation(p3, good).ok());
  BoxRepresentation spurious(1, {Box{{0, 2}}, Box{{1, 2}}, Box{{2, 3}}});
  auto v = verify_representation(p3, spurious);
  EXPECT_EQ(v.kind, RepresentationVerdict::Kind::spurious_intersection);
  EXPECT_EQ(v.u, 0);
  EXPECT_EQ(v.v, 2);
  BoxRepresentation missing(1, {Box{{0, 0}}, Box{{1, 2}}, Box{{2, 3}}});
  EXPECT_EQ(verify_representation(p3, missing).kind, RepresentationVerdict::Kind::missing_intersection);
  EXPECT_THROW(verify_representation(p3, BoxRepresentation(1, {Box{{0, 1}}})), Error);
  EXPECT_THROW(BoxRepresentation(2, {Box{{0, 1}}}), Error);
  EXPECT_THROW(BoxRepresentation(1, {Box{{3, 1}}}), Error);
}

TEST(Representation, TextRoundTrip) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const auto rep = testing_support::random_rep(rng, 1 + static_cast<int>(rng() % 10), 1 + static_cast<int>(rng() % 3), 20);
    EXPECT_EQ(parse_representation(serialize_representation(rep)), rep);
  }
  EXPECT_THROW(parse_representation("0 1 2\n1 1 2 3 4\n"), Error);
  EXPECT_THROW(parse_representation("0 3 2\n"), Error);
  EXPECT_THROW(parse_representation("1 0 2\n"), Error);
  EXPECT_THROW(parse_representation("0 0 2\n0 0 2\n"), Error);
  EXPECT_THROW(parse_representation(""), Error);
}

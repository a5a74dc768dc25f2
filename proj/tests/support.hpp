#ifndef BOXKIT_TESTS_SUPPORT_HPP
#define BOXKIT_TESTS_SUPPORT_HPP

// Generators and naive reference checks shared by the test binaries. The
// reference checks deliberately avoid the library's predicates.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "boxkit/constraints.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"

namespace testing_support {

using namespace boxkit;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

/// The labeled graph on n vertices whose pair (u, v), u < v, in lexicographic
/// order is an edge iff the matching bit of `mask` is set.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Box random_box(std::mt19937_64& rng, int d, Coord max_coord) {
  std::uniform_int_distribution<Coord> c(0, max_coord);
  Box b;
  for (int i = 0; i < d; ++i) {
    Coord x = c(rng), y = c(rng);
    if (x > y) std::swap(x, y);
    b.sides.push_back({x, y});
  }
  return b;
}

inline BoxRepresentation random_rep(std::mt19937_64& rng, int n, int d, Coord max_coord) {
  BoxRepresentation rep(d);
  for (int v = 0; v < n; ++v) rep.push_back(random_box(rng, d, max_coord));
  return rep;
}

/// Intersection graph of a representation, computed coordinate-wise.
inline Graph graph_of(const BoxRepresentation& rep) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < rep.size(); ++u)
    for (Vertex v = u + 1; v < rep.size(); ++v) {
      bool meet = true;
      for (int i = 0; i < rep.dim(); ++i)
        meet = meet && rep[u][i].lo <= rep[v][i].hi && rep[v][i].lo <= rep[u][i].hi;
      if (meet) edges.push_back({u, v});
    }
  return Graph::from_edges(rep.size(), edges);
}

// Half-integer grid scan over 2-D boxes with integer corners: the points
// (x/2, y/2) for x, y in [2*lo - 1, 2*hi + 1] over the joint range.
namespace naive {

inline bool in(const Box& b, Coord x2, Coord y2) {
  return 2 * b[0].lo <= x2 && x2 <= 2 * b[0].hi && 2 * b[1].lo <= y2 && y2 <= 2 * b[1].hi;
}

template <class F>
bool exists(const std::vector<const Box*>& bs, F&& f) {
  Coord lo[2] = {bs[0]->sides[0].lo, bs[0]->sides[1].lo}, hi[2] = {bs[0]->sides[0].hi, bs[0]->sides[1].hi};
  for (const Box* b : bs)
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], b->sides[i].lo);
      hi[i] = std::max(hi[i], b->sides[i].hi);
    }
  for (Coord x = 2 * lo[0] - 1; x <= 2 * hi[0] + 1; ++x)
    for (Coord y = 2 * lo[1] - 1; y <= 2 * hi[1] + 1; ++y)
      if (f(x, y)) return true;
  return false;
}

inline bool meet(const Box& a, const Box& b) {
  return exists({&a, &b}, [&](Coord x, Coord y) { return in(a, x, y) && in(b, x, y); });
}

inline bool diff_hits(const Box& c, const Box& a, const Box& b) {
  return exists({&c, &a, &b}, [&](Coord x, Coord y) { return in(c, x, y) && in(a, x, y) && !in(b, x, y); });
}

inline bool in_union(const Box& c, const Box& a, const Box& b) {
  return !exists({&c, &a, &b}, [&](Coord x, Coord y) { return in(c, x, y) && !in(a, x, y) && !in(b, x, y); });
}

inline bool cap_contained(const Box& c, const Box& a, const Box& b) {
  return !exists({&c, &a, &b}, [&](Coord x, Coord y) { return in(c, x, y) && in(a, x, y) && !in(b, x, y); });
}

/// Corners of a ∩ b found by scanning for the extreme grid points of the
/// intersection, then testing membership in c.
inline bool holds_corner(const Box& c, const Box& a, const Box& b) {
  Coord xl = INT64_MAX, xh = INT64_MIN, yl = INT64_MAX, yh = INT64_MIN;
  const bool any = exists({&a, &b}, [&](Coord x, Coord y) {
    if (in(a, x, y) && in(b, x, y)) {
      xl = std::min(xl, x), xh = std::max(xh, x), yl = std::min(yl, y), yh = std::max(yh, y);
    }
    return false;
  });
  (void)any;
  if (xl == INT64_MAX) return false;
  for (Coord x : {xl, xh})
    for (Coord y : {yl, yh})
      if (in(c, x, y)) return true;
  return false;
}

/// Crossing: one box's first side lies inside the other's first side while
/// the second sides nest the other way; 1-D containment by scanning.
inline bool crossing(const Box& u, const Box& v) {
  auto inside = [](const Interval& p, const Interval& q) {
    for (Coord x = 2 * p.lo; x <= 2 * p.hi; ++x)
      if (x < 2 * q.lo || x > 2 * q.hi) return false;
    return true;
  };
  return (inside(u[0], v[0]) && inside(v[1], u[1])) || (inside(v[0], u[0]) && inside(u[1], v[1]));
}

inline bool common_point(const Box& a, const Box& b, const Box& c) {
  return exists({&a, &b, &c}, [&](Coord x, Coord y) { return in(a, x, y) && in(b, x, y) && in(c, x, y); });
}

/// Side-constraint check in terms of the naive predicates above.
inline bool satisfies(const BoxRepresentation& rep, const SideConstraint& sc) {
  return std::visit(
      overloaded{
          [&](const RequireCrossing& x) { return crossing(rep[x.u], rep[x.v]); },
          [&](const ForbidCrossing& x) { return !crossing(rep[x.u], rep[x.v]); },
          [&](const RequireBoxInUnion& x) { return in_union(rep[x.c], rep[x.a], rep[x.b]); },
          [&](const RequireIntersectionContained& x) { return cap_contained(rep[x.c], rep[x.a], rep[x.b]); },
          [&](const ForbidProjectionInCap& x) {
            const int i = x.dim - 1;
            const Interval& c = rep[x.c][i];
            const Interval& a = rep[x.a][i];
            const Interval& b = rep[x.b][i];
            for (Coord p = 2 * c.lo; p <= 2 * c.hi; ++p)
              if (p < 2 * a.lo || p > 2 * a.hi || p < 2 * b.lo || p > 2 * b.hi) return true;
            return false;
          },
          [&](const ForbidCornerMembership& x) { return !holds_corner(rep[x.c], rep[x.a], rep[x.b]); },
      },
      sc);
}

}  // namespace naive

/// A random side constraint on three distinct vertices of an n-vertex graph.
inline SideConstraint random_constraint(std::mt19937_64& rng, int n) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  std::shuffle(vs.begin(), vs.end(), rng);
  const Vertex c = vs[0], a = vs[1], b = vs[2];
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return RequireCrossing{c, a};
    case 1: return ForbidCrossing{c, a};
    case 2: return RequireBoxInUnion{c, a, b};
    case 3: return RequireIntersectionContained{c, a, b};
    case 4: return ForbidProjectionInCap{std::uniform_int_distribution<int>(1, 2)(rng), c, a, b};
    default: return ForbidCornerMembership{c, a, b};
  }
}

}  // namespace testing_support

#endif  // BOXKIT_TESTS_SUPPORT_HPP

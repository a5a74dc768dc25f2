#ifndef BOXKIT_GEOMETRY_HPP
#define BOXKIT_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "boxkit/error.hpp"
#include "boxkit/graph.hpp"

namespace boxkit {

using Coord = std::int64_t;

/// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
  Coord lo = 0;
  Coord hi = 0;

  bool valid() const noexcept { return lo <= hi; }
  bool contains(Coord x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const noexcept { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const Interval& o) const noexcept { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  if (!a.overlaps(b)) return std::nullopt;
  return Interval{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

/// True iff every point of `c` lies in a or b. With c, a, b closed, either one
/// of them contains c or one covers c's left end, the other its right end,
/// and they meet.
inline bool interval_in_union(const Interval& c, const Interval& a, const Interval& b) {
  if (a.contains(c) || b.contains(c)) return true;
  auto chained = [&](const Interval& left, const Interval& right) {
    return left.lo <= c.lo && right.lo <= left.hi && c.hi <= right.hi;
  };
  return chained(a, b) || chained(b, a);
}

/// Axis-parallel box: the product of its per-dimension intervals.
struct Box {
  std::vector<Interval> sides;

  Box() = default;
  explicit Box(std::vector<Interval> s) : sides(std::move(s)) {}
  Box(std::initializer_list<Interval> s) : sides(s) {}

  int dim() const noexcept { return static_cast<int>(sides.size()); }
  const Interval& operator[](int i) const { return sides[i]; }
  Interval& operator[](int i) { return sides[i]; }

  bool contains(const std::vector<Coord>& p) const {
    for (int i = 0; i < dim(); ++i)
      if (!sides[i].contains(p[i])) return false;
    return true;
  }

  friend bool operator==(const Box&, const Box&) = default;
};

namespace detail {

inline void same_dim(const Box& x, const Box& y) {
  if (x.dim() != y.dim())
    throw Error(ErrorCode::dimension_mismatch,
                "boxes of dimension " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
}

inline void require_2d(const Box& x) {
  if (x.dim() != 2)
    throw Error(ErrorCode::dimension_mismatch, "predicate is defined for rectangles (d = 2) only");
}

}  // namespace detail

inline bool boxes_intersect(const Box& x, const Box& y) {
  detail::same_dim(x, y);
  for (int i = 0; i < x.dim(); ++i)
    if (!x[i].overlaps(y[i])) return false;
  return true;
}

inline bool box_contains(const Box& outer, const Box& inner) {
  detail::same_dim(outer, inner);
  for (int i = 0; i < outer.dim(); ++i)
    if (!outer[i].contains(inner[i])) return false;
  return true;
}

inline std::optional<Box> intersect(const Box& x, const Box& y) {
  detail::same_dim(x, y);
  Box out;
  for (int i = 0; i < x.dim(); ++i) {
    auto s = intersect(x[i], y[i]);
    if (!s) return std::nullopt;
    out.sides.push_back(*s);
  }
  return out;
}

/// Vertex -> box map with a fixed dimension.
class BoxRepresentation {
 public:
  BoxRepresentation() = default;
  explicit BoxRepresentation(int d) : d_(d) {}
  BoxRepresentation(int d, std::vector<Box> boxes) : d_(d), boxes_(std::move(boxes)) {
    for (const auto& b : boxes_) check(b);
  }

  int dim() const noexcept { return d_; }
  int size() const noexcept { return static_cast<int>(boxes_.size()); }
  const Box& operator[](Vertex v) const { return boxes_.at(v); }
  const std::vector<Box>& boxes() const noexcept { return boxes_; }

  void push_back(Box b) {
    check(b);
    boxes_.push_back(std::move(b));
  }

  friend bool operator==(const BoxRepresentation&, const BoxRepresentation&) = default;

 private:
  void check(const Box& b) const {
    if (b.dim() != d_)
      throw Error(ErrorCode::dimension_mismatch, "box dimension differs from representation");
    for (const auto& s : b.sides)
      if (!s.valid()) throw Error(ErrorCode::invalid_argument, "interval with lo > hi");
  }

  int d_ = 0;
  std::vector<Box> boxes_;
};

struct RepresentationVerdict {
  enum class Kind { ok, missing_intersection, spurious_intersection };
  Kind kind = Kind::ok;
  Vertex u = -1;
  Vertex v = -1;

  bool ok() const noexcept { return kind == Kind::ok; }
  std::string describe() const {
    switch (kind) {
      case Kind::ok: return "ok";
      case Kind::missing_intersection:
        return "edge " + std::to_string(u) + " " + std::to_string(v) + " has disjoint boxes";
      case Kind::spurious_intersection:
        return "non-edge " + std::to_string(u) + " " + std::to_string(v) + " has intersecting boxes";
    }
    return "?";
  }
};

/// Checks adjacency <=> box intersection for every pair; reports the first
/// offending pair in (u, v) lexicographic order.
inline RepresentationVerdict verify_representation(const Graph& g, const BoxRepresentation& rep) {
  if (rep.dim() < 1) throw Error(ErrorCode::invalid_argument, "representation of dimension 0");
  if (rep.size() != g.n())
    throw Error(ErrorCode::invalid_argument, "representation covers " + std::to_string(rep.size()) +
                                                 " of " + std::to_string(g.n()) + " vertices");
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const bool meet = boxes_intersect(rep[u], rep[v]);
      if (meet != g.adjacent(u, v)) {
        using K = RepresentationVerdict::Kind;
        return {meet ? K::spurious_intersection : K::missing_intersection, u, v};
      }
    }
  return {};
}

// ---------------------------------------------------------------------------
// Rectangle predicates

struct Point2 {
  Coord x = 0;
  Coord y = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// The four corners (l1,l2), (l1,r2), (r1,l2), (r1,r2) of x ∩ y.
struct CornerPoints {
  Coord l1 = 0, r1 = 0, l2 = 0, r2 = 0;

  std::array<Point2, 4> points() const { return {{{l1, l2}, {l1, r2}, {r1, l2}, {r1, r2}}}; }
};

inline CornerPoints corner_points(const Box& x, const Box& y) {
  detail::require_2d(x);
  detail::same_dim(x, y);
  if (!boxes_intersect(x, y))
    throw Error(ErrorCode::not_intersecting, "corner points need intersecting boxes");
  return {std::max(x[0].lo, y[0].lo), std::min(x[0].hi, y[0].hi), std::max(x[1].lo, y[1].lo),
          std::min(x[1].hi, y[1].hi)};
}

inline bool contains_point(const Box& b, const Point2& p) {
  detail::require_2d(b);
  return b[0].contains(p.x) && b[1].contains(p.y);
}

/// True iff `c` contains some corner point of a ∩ b (false if a, b are disjoint).
inline bool contains_corner_of(const Box& c, const Box& a, const Box& b) {
  if (!boxes_intersect(a, b)) return false;
  for (const auto& p : corner_points(a, b).points())
    if (contains_point(c, p)) return true;
  return false;
}

/// Non-strict: u, v cross when one's first projection sits inside the
/// other's while the second projections nest the other way. Equal boxes cross.
inline bool is_crossing_pair(const Box& u, const Box& v) {
  detail::require_2d(u);
  detail::require_2d(v);
  return (v[0].contains(u[0]) && u[1].contains(v[1])) || (u[0].contains(v[0]) && v[1].contains(u[1]));
}

inline bool is_crossing_pair(const BoxRepresentation& rep, Vertex u, Vertex v) {
  return is_crossing_pair(rep[u], rep[v]);
}

/// c ∩ (a − b) ≠ ∅. Evaluated through projections: c ∩ a must be non-empty
/// and in some dimension the slab c_i ∩ a_i must stick out of b_i.
inline bool box_diff_hits(const Box& c, const Box& a, const Box& b) {
  detail::same_dim(c, a);
  detail::same_dim(c, b);
  auto ca = intersect(c, a);
  if (!ca) return false;
  for (int i = 0; i < ca->dim(); ++i)
    if (!b[i].contains((*ca)[i])) return true;
  return false;
}

/// c ⊆ a ∪ b for rectangles.
inline bool box_in_union(const Box& c, const Box& a, const Box& b) {
  detail::require_2d(c);
  detail::same_dim(c, a);
  detail::same_dim(c, b);
  if (box_contains(a, c) || box_contains(b, c)) return true;
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    if (a[i].contains(c[i]) && b[i].contains(c[i]) && interval_in_union(c[j], a[j], b[j])) return true;
  }
  return false;
}

/// c ∩ a ⊆ b.
inline bool intersection_contained(const Box& c, const Box& a, const Box& b) {
  auto ca = intersect(c, a);
  return !ca || box_contains(b, *ca);
}

/// A point of x ∩ y ∩ z (per-dimension max of lower ends) when the three
/// boxes pairwise intersect.
inline std::optional<std::vector<Coord>> helly_witness(const Box& x, const Box& y, const Box& z) {
  detail::same_dim(x, y);
  detail::same_dim(x, z);
  if (!boxes_intersect(x, y) || !boxes_intersect(y, z) || !boxes_intersect(x, z)) return std::nullopt;
  std::vector<Coord> p(x.dim());
  for (int i = 0; i < x.dim(); ++i) p[i] = std::max({x[i].lo, y[i].lo, z[i].lo});
  return p;
}

// ---------------------------------------------------------------------------
// Representation text format: "v l_1 r_1 ... l_d r_d" per line.

inline std::string serialize_representation(const BoxRepresentation& rep) {
  std::ostringstream out;
  for (Vertex v = 0; v < rep.size(); ++v) {
    out << v;
    for (const auto& s : rep[v].sides) out << ' ' << s.lo << ' ' << s.hi;
    out << '\n';
  }
  return out.str();
}

inline BoxRepresentation parse_representation(std::istream& in) {
  std::string line;
  std::vector<std::optional<Box>> boxes;
  int d = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    std::vector<long long> nums;
    for (const auto& t : toks) {
      long long x = 0;
      if (!detail::parse_int(t, x))
        throw Error(ErrorCode::malformed_edge, "line " + std::to_string(lineno) + ": expected integers");
      nums.push_back(x);
    }
    if (nums.size() < 3 || nums.size() % 2 == 0)
      throw Error(ErrorCode::malformed_edge, "line " + std::to_string(lineno) + ": expected 'v l1 r1 ...'");
    const int line_d = static_cast<int>(nums.size() - 1) / 2;
    if (d < 0) d = line_d;
    if (line_d != d)
      throw Error(ErrorCode::dimension_mismatch, "line " + std::to_string(lineno) + ": dimension changes");
    if (nums[0] < 0 || nums[0] > 1'000'000)
      throw Error(ErrorCode::vertex_out_of_range, "line " + std::to_string(lineno));
    const auto v = static_cast<std::size_t>(nums[0]);
    if (boxes.size() <= v) boxes.resize(v + 1);
    if (boxes[v])
      throw Error(ErrorCode::duplicate_edge, "vertex " + std::to_string(v) + " listed twice");
    Box b;
    for (int i = 0; i < d; ++i) {
      Interval s{nums[1 + 2 * i], nums[2 + 2 * i]};
      if (!s.valid())
        throw Error(ErrorCode::invalid_argument, "line " + std::to_string(lineno) + ": lo > hi");
      b.sides.push_back(s);
    }
    boxes[v] = b;
  }
  if (d < 0) throw Error(ErrorCode::malformed_header, "empty representation");
  BoxRepresentation rep(d);
  for (std::size_t v = 0; v < boxes.size(); ++v) {
    if (!boxes[v]) throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " missing");
    rep.push_back(*boxes[v]);
  }
  return rep;
}

inline BoxRepresentation parse_representation(const std::string& text) {
  std::istringstream in(text);
  return parse_representation(in);
}

}  // namespace boxkit

#endif  // BOXKIT_GEOMETRY_HPP

#ifndef BOXKIT_CONSTRAINTS_HPP
#define BOXKIT_CONSTRAINTS_HPP

#include <string>
#include <variant>
#include <vector>

#include "boxkit/error.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"

namespace boxkit {

// Restrictions on rectangle representations. Each one is a predicate over the
// endpoint order of the boxes involved, so it can be compiled into the
// endpoint encoding and re-checked on concrete boxes.

struct RequireCrossing {
  Vertex u, v;
};
struct ForbidCrossing {
  Vertex u, v;
};
/// θ(c) ⊆ θ(a) ∪ θ(b)
struct RequireBoxInUnion {
  Vertex c, a, b;
};
/// θ(c) ∩ θ(a) ⊆ θ(b)
struct RequireIntersectionContained {
  Vertex c, a, b;
};
/// Π_dim(c) ⊄ Π_dim(a) ∩ Π_dim(b); dim is 1-based.
struct ForbidProjectionInCap {
  int dim;
  Vertex c, a, b;
};
/// θ(c) contains no corner point of θ(a) ∩ θ(b).
struct ForbidCornerMembership {
  Vertex c, a, b;
};

using SideConstraint = std::variant<RequireCrossing, ForbidCrossing, RequireBoxInUnion,
                                    RequireIntersectionContained, ForbidProjectionInCap,
                                    ForbidCornerMembership>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::vector<Vertex> constraint_vertices(const SideConstraint& sc) {
  return std::visit(overloaded{
                        [](const RequireCrossing& x) { return std::vector<Vertex>{x.u, x.v}; },
                        [](const ForbidCrossing& x) { return std::vector<Vertex>{x.u, x.v}; },
                        [](const auto& x) { return std::vector<Vertex>{x.c, x.a, x.b}; },
                    },
                    sc);
}

/// Text form, also used in CNF headers: "<kind> [dim] <v>...".
inline std::string to_text(const SideConstraint& sc, const Graph* g = nullptr) {
  auto name = [&](Vertex v) { return g ? g->display_name(v) : std::to_string(v); };
  return std::visit(
      overloaded{
          [&](const RequireCrossing& x) { return "require-crossing " + name(x.u) + " " + name(x.v); },
          [&](const ForbidCrossing& x) { return "forbid-crossing " + name(x.u) + " " + name(x.v); },
          [&](const RequireBoxInUnion& x) {
            return "box-in-union " + name(x.c) + " " + name(x.a) + " " + name(x.b);
          },
          [&](const RequireIntersectionContained& x) {
            return "intersection-contained " + name(x.c) + " " + name(x.a) + " " + name(x.b);
          },
          [&](const ForbidProjectionInCap& x) {
            return "projection-not-in-cap " + std::to_string(x.dim) + " " + name(x.c) + " " + name(x.a) +
                   " " + name(x.b);
          },
          [&](const ForbidCornerMembership& x) {
            return "forbid-corner " + name(x.c) + " " + name(x.a) + " " + name(x.b);
          },
      },
      sc);
}

/// Parses the text form. Vertices may be indices or labels of `g`.
inline SideConstraint parse_constraint(const std::string& text, const Graph& g) {
  auto toks = detail::split_ws(text);
  auto bad = [&](const std::string& why) { return Error(ErrorCode::invalid_argument, "constraint '" + text + "': " + why); };
  if (toks.empty()) throw bad("empty");
  auto vertex = [&](const std::string& t) -> Vertex {
    long long x = 0;
    if (detail::parse_int(t, x)) {
      if (x < 0 || x >= g.n()) throw bad("vertex out of range");
      return static_cast<Vertex>(x);
    }
    auto v = g.find_label(t);
    if (!v) throw bad("unknown vertex '" + t + "'");
    return *v;
  };
  auto need = [&](std::size_t n) {
    if (toks.size() != n + 1) throw bad("expected " + std::to_string(n) + " arguments");
  };
  const std::string& kind = toks[0];
  if (kind == "require-crossing") {
    need(2);
    return RequireCrossing{vertex(toks[1]), vertex(toks[2])};
  }
  if (kind == "forbid-crossing") {
    need(2);
    return ForbidCrossing{vertex(toks[1]), vertex(toks[2])};
  }
  if (kind == "box-in-union") {
    need(3);
    return RequireBoxInUnion{vertex(toks[1]), vertex(toks[2]), vertex(toks[3])};
  }
  if (kind == "intersection-contained") {
    need(3);
    return RequireIntersectionContained{vertex(toks[1]), vertex(toks[2]), vertex(toks[3])};
  }
  if (kind == "projection-not-in-cap") {
    need(4);
    long long dim = 0;
    if (!detail::parse_int(toks[1], dim) || (dim != 1 && dim != 2)) throw bad("dimension must be 1 or 2");
    return ForbidProjectionInCap{static_cast<int>(dim), vertex(toks[2]), vertex(toks[3]), vertex(toks[4])};
  }
  if (kind == "forbid-corner") {
    need(3);
    return ForbidCornerMembership{vertex(toks[1]), vertex(toks[2]), vertex(toks[3])};
  }
  throw bad("unknown kind '" + kind + "'");
}

/// Rejects constraints that name missing vertices or are used outside d = 2.
inline void validate_constraints(const Graph& g, int d, const std::vector<SideConstraint>& cons) {
  for (const auto& sc : cons) {
    for (Vertex v : constraint_vertices(sc)) g.check_vertex(v);
    if (d != 2)
      throw Error(ErrorCode::unsupported, "side constraint '" + to_text(sc) + "' needs d = 2");
    if (auto* p = std::get_if<ForbidProjectionInCap>(&sc); p && p->dim != 1 && p->dim != 2)
      throw Error(ErrorCode::invalid_argument, "projection dimension must be 1 or 2");
  }
}

/// Evaluates a constraint on concrete boxes using the geometry predicates.
inline bool satisfies(const BoxRepresentation& rep, const SideConstraint& sc) {
  return std::visit(
      overloaded{
          [&](const RequireCrossing& x) { return is_crossing_pair(rep, x.u, x.v); },
          [&](const ForbidCrossing& x) { return !is_crossing_pair(rep, x.u, x.v); },
          [&](const RequireBoxInUnion& x) { return box_in_union(rep[x.c], rep[x.a], rep[x.b]); },
          [&](const RequireIntersectionContained& x) {
            return intersection_contained(rep[x.c], rep[x.a], rep[x.b]);
          },
          [&](const ForbidProjectionInCap& x) {
            const int i = x.dim - 1;
            auto cap = intersect(rep[x.a][i], rep[x.b][i]);
            return !cap || !cap->contains(rep[x.c][i]);
          },
          [&](const ForbidCornerMembership& x) { return !contains_corner_of(rep[x.c], rep[x.a], rep[x.b]); },
      },
      sc);
}

}  // namespace boxkit

#endif  // BOXKIT_CONSTRAINTS_HPP

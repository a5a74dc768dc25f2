#ifndef BOXKIT_VERIFY_HPP
#define BOXKIT_VERIFY_HPP

// Machine checks for the rectangle lemmas behind the boxicity-3 gadget.
//
// Lemmas about every rectangle representation of a fixed gadget are checked
// by asking the endpoint engine for a representation satisfying the
// negation; the lemma holds iff that query is infeasible. The two lemmas
// that quantify over all boxes (Helly, projection) are checked by sampling
// against exact grid oracles.

#include <chrono>
#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "boxkit/constraints.hpp"
#include "boxkit/error.hpp"
#include "boxkit/gadgets.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/solver.hpp"

namespace boxkit {

enum class LemmaId { pendant, helly, difference, projection, corner, cross, main };

inline const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids{LemmaId::pendant, LemmaId::helly,  LemmaId::difference, LemmaId::projection,
                                        LemmaId::corner,  LemmaId::cross, LemmaId::main};
  return ids;
}

inline std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::pendant: return "pendant";
    case LemmaId::helly: return "helly";
    case LemmaId::difference: return "difference";
    case LemmaId::projection: return "projection";
    case LemmaId::corner: return "corner";
    case LemmaId::cross: return "cross";
    case LemmaId::main: return "main";
  }
  return "?";
}

inline LemmaId parse_lemma(const std::string& s) {
  for (LemmaId id : all_lemmas())
    if (to_string(id) == s) return id;
  throw Error(ErrorCode::invalid_argument, "unknown lemma '" + s + "'");
}

// ---------------------------------------------------------------------------
// Grid oracles
//
// For closed boxes with integer corners every region cut out by the
// predicates below contains a point with half-integer coordinates, so
// scanning the doubled integer grid over the bounding range decides them
// exactly.

namespace grid {

struct Range {
  Coord lo, hi;  // doubled coordinates
};

inline Range span_of(std::initializer_list<const Box*> boxes, int dim) {
  Range r{std::numeric_limits<Coord>::max(), std::numeric_limits<Coord>::min()};
  for (const Box* b : boxes) {
    r.lo = std::min(r.lo, 2 * (*b)[dim].lo - 1);
    r.hi = std::max(r.hi, 2 * (*b)[dim].hi + 1);
  }
  return r;
}

inline bool in(const Box& b, const std::vector<Coord>& doubled) {
  for (int i = 0; i < b.dim(); ++i)
    if (doubled[i] < 2 * b[i].lo || doubled[i] > 2 * b[i].hi) return false;
  return true;
}

/// Visits every doubled-grid point of the joint bounding range; stops early
/// when `fn` returns true and reports whether it did.
inline bool any_point(std::initializer_list<const Box*> boxes, const std::function<bool(const std::vector<Coord>&)>& fn) {
  const int d = (*boxes.begin())->dim();
  std::vector<Range> ranges;
  for (int i = 0; i < d; ++i) ranges.push_back(span_of(boxes, i));
  std::vector<Coord> p(d);
  for (int i = 0; i < d; ++i) p[i] = ranges[i].lo;
  for (;;) {
    if (fn(p)) return true;
    int i = 0;
    while (i < d && ++p[i] > ranges[i].hi) {
      p[i] = ranges[i].lo;
      ++i;
    }
    if (i == d) return false;
  }
}

inline bool intersect(const Box& x, const Box& y) {
  return any_point({&x, &y}, [&](const auto& p) { return in(x, p) && in(y, p); });
}

inline bool common_point(const Box& x, const Box& y, const Box& z) {
  return any_point({&x, &y, &z}, [&](const auto& p) { return in(x, p) && in(y, p) && in(z, p); });
}

inline bool diff_hits(const Box& c, const Box& a, const Box& b) {
  return any_point({&c, &a, &b}, [&](const auto& p) { return in(c, p) && in(a, p) && !in(b, p); });
}

inline bool in_union(const Box& c, const Box& a, const Box& b) {
  return !any_point({&c, &a, &b}, [&](const auto& p) { return in(c, p) && !in(a, p) && !in(b, p); });
}

/// Π(c) ∩ (Π(a) − Π(b)) ≠ ∅ for one dimension, by scanning that axis.
inline bool interval_diff_hits(const Interval& c, const Interval& a, const Interval& b) {
  const Box bc{c}, ba{a}, bb{b};
  return diff_hits(bc, ba, bb);
}

}  // namespace grid

// ---------------------------------------------------------------------------

enum class VerdictKind { verified, refuted, undecided };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::verified: return "verified";
    case VerdictKind::refuted: return "refuted";
    case VerdictKind::undecided: return "undecided";
  }
  return "?";
}

/// One solver call issued by a checker, as reported.
struct QueryRecord {
  std::string description;
  std::string graph;  // gadget name and fan width
  int d = 2;
  std::vector<std::string> constraints;
  Engine engine = Engine::endpoint;
  Status status = Status::budget_exhausted;
  SolveStats stats;
};

struct Verdict {
  std::string subject;
  VerdictKind kind = VerdictKind::undecided;
  std::optional<BoxRepresentation> counterexample;
  std::vector<QueryRecord> queries;
  std::uint64_t samples = 0;  // sampled checks only
  std::string note;
  double seconds = 0;

  bool verified() const noexcept { return kind == VerdictKind::verified; }
};

using DiffHitsFn = std::function<bool(const Box&, const Box&, const Box&)>;

struct LemmaOptions {
  Budget budget;
  Engine engine = Engine::endpoint;
  std::uint64_t seed = 0;
  int k = 5;
  std::uint64_t samples = 100000;
  Coord max_coord = 8;
  /// Sort the interchangeable fan vertices c_1..c_k by left end (cross, main).
  bool symmetry_breaking = false;
  /// Predicate under test for the projection check; swapped out by mutation tests.
  DiffHitsFn diff_hits = [](const Box& c, const Box& a, const Box& b) { return box_diff_hits(c, a, b); };
};

namespace detail {

inline Box random_box(std::mt19937_64& rng, int d, Coord max_coord) {
  std::uniform_int_distribution<Coord> coord(0, max_coord);
  Box b;
  for (int i = 0; i < d; ++i) {
    Coord x = coord(rng), y = coord(rng);
    b.sides.push_back({std::min(x, y), std::max(x, y)});
  }
  return b;
}

inline BoxRepresentation triple(const Box& x, const Box& y, const Box& z) {
  return BoxRepresentation(x.dim(), {x, y, z});
}

/// Runs one "negation must be infeasible" query and folds it into `v`.
inline void refute(Verdict& v, const std::string& description, const GadgetSpec& spec,
                   const std::vector<SideConstraint>& cons, const LemmaOptions& opts,
                   std::chrono::steady_clock::time_point start, const EndpointOptions& eo = {}) {
  const Graph g = build_gadget(spec);
  SolveOptions so;
  so.engine = opts.engine;
  so.seed = opts.seed;
  so.budget = opts.budget;
  if (so.budget.seconds) {
    // The time budget covers the whole lemma, not each query.
    const double left = *so.budget.seconds - elapsed(start);
    so.budget.seconds = std::max(left, 1e-3);
  }
  so.endpoint = eo;
  QueryRecord q;
  q.description = description;
  q.graph = to_string(spec.name) + (spec.name == GadgetName::L3 || spec.name == GadgetName::L4 || spec.name == GadgetName::G
                                        ? "(k=" + std::to_string(spec.k) + ")"
                                        : "");
  q.engine = opts.engine;
  for (const auto& sc : cons) q.constraints.push_back(to_text(sc, &g));
  const SolveOutcome out = decide_box_le(g, 2, cons, so);
  q.status = out.status;
  q.stats = out.stats;
  v.queries.push_back(q);
  if (v.kind == VerdictKind::refuted) return;
  if (out.feasible()) {
    certify(g, *out.rep, cons);  // the counterexample must really break the lemma
    v.kind = VerdictKind::refuted;
    v.counterexample = out.rep;
  } else if (!out.decided()) {
    v.kind = VerdictKind::undecided;
  }
}

inline std::vector<Vertex> fan(const Graph& g, int k) {
  std::vector<Vertex> cs;
  for (int i = 1; i <= k; ++i) cs.push_back(g.at(role("c", i)));
  return cs;
}

}  // namespace detail

/// Checks one lemma. Verified requires every query to be refuted
/// completely (or every sample to pass); budget exhaustion is Undecided.
inline Verdict check_lemma(LemmaId id, const LemmaOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.subject = to_string(id);
  v.kind = VerdictKind::verified;
  opts.budget.validate();
  if (opts.engine != Engine::endpoint && id != LemmaId::helly && id != LemmaId::projection)
    throw Error(ErrorCode::unsupported, "lemma queries carry side constraints; only the endpoint engine supports them");

  auto l = [](GadgetName n, int k = 5) { return GadgetSpec{n, k}; };
  switch (id) {
    case LemmaId::pendant: {
      const Graph g = build_gadget(l(GadgetName::L1));
      detail::refute(v, "c inside a ∪ b", l(GadgetName::L1), {RequireBoxInUnion{g.at("c"), g.at("a"), g.at("b")}}, opts,
                     start);
      break;
    }
    case LemmaId::difference: {
      const Graph g = build_gadget(l(GadgetName::L2));
      const Vertex a = g.at("a"), b = g.at("b"), c = g.at("c");
      detail::refute(v, "c ∩ a inside b", l(GadgetName::L2), {RequireIntersectionContained{c, a, b}}, opts, start);
      detail::refute(v, "c ∩ b inside a", l(GadgetName::L2), {RequireIntersectionContained{c, b, a}}, opts, start);
      break;
    }
    case LemmaId::corner: {
      const Graph g = build_gadget(l(GadgetName::L2));
      const Vertex a = g.at("a"), b = g.at("b"), c = g.at("c");
      detail::refute(v, "both projections of c leave a ∩ b, yet c holds no corner", l(GadgetName::L2),
                     {ForbidProjectionInCap{1, c, a, b}, ForbidProjectionInCap{2, c, a, b}, ForbidCornerMembership{c, a, b}},
                     opts, start);
      break;
    }
    case LemmaId::cross: {
      const GadgetSpec spec = l(GadgetName::L3, opts.k);
      const Graph g = build_gadget(spec);
      EndpointOptions eo;
      // Permuting the blocks (c_i, x_i, y_i) is an automorphism of L3 fixing a
      // and b, and the query only mentions a and b, so any solution can be
      // relabelled to have the c_i sorted by their first left end.
      if (opts.symmetry_breaking) eo.sorted_left_ends.push_back(detail::fan(g, opts.k));
      detail::refute(v, "a, b form a crossing pair", spec, {RequireCrossing{g.at("a"), g.at("b")}}, opts, start, eo);
      break;
    }
    case LemmaId::main: {
      const GadgetSpec spec = l(GadgetName::L4, opts.k);
      const Graph g = build_gadget(spec);
      std::vector<SideConstraint> cons;
      for (Vertex c : detail::fan(g, opts.k)) {
        cons.push_back(ForbidCrossing{g.at("a"), c});
        cons.push_back(ForbidCrossing{g.at("b"), c});
      }
      EndpointOptions eo;
      // Same argument with blocks (c_i, x_i, y_i, z_i) of L4; the constraint
      // set is invariant under permuting i.
      if (opts.symmetry_breaking) eo.sorted_left_ends.push_back(detail::fan(g, opts.k));
      detail::refute(v, "no c_i crosses a or b", spec, cons, opts, start, eo);
      break;
    }
    case LemmaId::helly: {
      // Every representation of a triangle: three pairwise-meeting rectangles.
      std::mt19937_64 rng(opts.seed);
      while (v.samples < opts.samples) {
        if (opts.budget.seconds && detail::elapsed(start) > *opts.budget.seconds) {
          v.kind = VerdictKind::undecided;
          break;
        }
        const Box x = detail::random_box(rng, 2, opts.max_coord), y = detail::random_box(rng, 2, opts.max_coord),
                  z = detail::random_box(rng, 2, opts.max_coord);
        if (!grid::intersect(x, y) || !grid::intersect(y, z) || !grid::intersect(x, z)) continue;
        ++v.samples;
        const auto w = helly_witness(x, y, z);
        if (!w || !x.contains(*w) || !y.contains(*w) || !z.contains(*w) || !grid::common_point(x, y, z)) {
          v.kind = VerdictKind::refuted;
          v.counterexample = detail::triple(x, y, z);
          break;
        }
      }
      break;
    }
    case LemmaId::projection: {
      std::mt19937_64 rng(opts.seed);
      while (v.samples < opts.samples) {
        if (opts.budget.seconds && detail::elapsed(start) > *opts.budget.seconds) {
          v.kind = VerdictKind::undecided;
          break;
        }
        const Box c = detail::random_box(rng, 2, opts.max_coord), a = detail::random_box(rng, 2, opts.max_coord),
                  b = detail::random_box(rng, 2, opts.max_coord);
        ++v.samples;
        const bool tested = opts.diff_hits(c, a, b);
        const bool truth = grid::diff_hits(c, a, b);
        bool per_dim = false;
        if (grid::intersect(c, a))
          for (int i = 0; i < 2; ++i) per_dim |= grid::interval_diff_hits(c[i], a[i], b[i]);
        if (tested != truth || per_dim != truth) {
          v.kind = VerdictKind::refuted;
          v.counterexample = detail::triple(c, a, b);
          v.note = "predicate " + std::string(tested ? "true" : "false") + ", grid " + (truth ? "true" : "false") +
                   ", projections " + (per_dim ? "true" : "false");
          break;
        }
      }
      break;
    }
  }
  v.seconds = detail::elapsed(start);
  return v;
}

// ---------------------------------------------------------------------------
// Theorem

struct DecompositionEntry {
  std::string description;
  bool ok = false;
  std::string why;
};

struct DecompositionReport {
  int k = 0;
  int n = 0;
  std::size_t m = 0;
  std::vector<DecompositionEntry> entries;

  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok) return false;
    return !entries.empty();
  }
};

/// Builds G(k) and checks the L4 embedding and the 2k L3 embeddings used by
/// the lower-bound argument, each via its explicit label bijection.
inline DecompositionReport check_theorem_decomposition(int k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "fan width k must be >= 1");
  DecompositionReport rep;
  rep.k = k;
  const Graph g = build_gadget({GadgetName::G, k});
  rep.n = g.n();
  rep.m = g.m();
  std::vector<SubgadgetQuery> queries{{GadgetName::L4, 1, Side::a_side}};
  for (int i = 1; i <= k; ++i) {
    queries.push_back({GadgetName::L3, i, Side::a_side});
    queries.push_back({GadgetName::L3, i, Side::b_side});
  }
  for (const auto& q : queries) {
    DecompositionEntry e;
    const Embedding emb = embedded_subgadget(g, k, q);
    e.description = emb.description;
    e.ok = embedding_is_isomorphism(g, emb, &e.why);
    rep.entries.push_back(e);
  }
  return rep;
}

struct TheoremOptions {
  Budget budget;
  std::uint64_t seed = 0;
  int k = 5;
  Engine engine = Engine::before_cegar;
  std::function<void(const SolveStats&)> checkpoint;
  std::uint64_t checkpoint_every = 10000;
};

/// Lower bound of box(G(k)) = 3: G(k) has no rectangle representation.
inline Verdict check_theorem_full(const TheoremOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.subject = "theorem";
  const GadgetSpec spec{GadgetName::G, opts.k};
  const Graph g = build_gadget(spec);
  SolveOptions so;
  so.engine = opts.engine;
  so.budget = opts.budget;
  so.seed = opts.seed;
  so.progress = opts.checkpoint;
  so.progress_every = opts.checkpoint_every;
  const SolveOutcome out = decide_box_le(g, 2, {}, so);
  QueryRecord q;
  q.description = "G has a rectangle representation";
  q.graph = "G(k=" + std::to_string(opts.k) + ")";
  q.engine = opts.engine;
  q.status = out.status;
  q.stats = out.stats;
  v.queries.push_back(q);
  if (out.infeasible()) {
    v.kind = VerdictKind::verified;
  } else if (out.feasible()) {
    v.kind = VerdictKind::refuted;
    v.counterexample = out.rep;
  } else {
    v.kind = VerdictKind::undecided;
  }
  v.seconds = detail::elapsed(start);
  return v;
}

}  // namespace boxkit

#endif  // BOXKIT_VERIFY_HPP

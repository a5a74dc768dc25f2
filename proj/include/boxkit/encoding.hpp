#ifndef BOXKIT_ENCODING_HPP
#define BOXKIT_ENCODING_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "boxkit/constraints.hpp"
#include "boxkit/error.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/sat.hpp"

namespace boxkit {

using sat::Lit;

// ---------------------------------------------------------------------------
// Endpoint orders
//
// One dimension of a representation, up to everything our predicates can
// observe, is a total preorder on the 2n endpoint tokens. Token 2v is the
// left end of v, token 2v + 1 its right end.

inline constexpr int left_token(Vertex v) noexcept { return 2 * v; }
inline constexpr int right_token(Vertex v) noexcept { return 2 * v + 1; }

inline std::string token_name(int t) { return (t % 2 == 0 ? "L" : "R") + std::to_string(t / 2); }

inline int parse_token(const std::string& s) {
  long long v = 0;
  if (s.size() < 2 || (s[0] != 'L' && s[0] != 'R') || !detail::parse_int(s.substr(1), v) || v < 0)
    throw Error(ErrorCode::invalid_argument, "bad endpoint token '" + s + "'");
  return s[0] == 'L' ? left_token(static_cast<Vertex>(v)) : right_token(static_cast<Vertex>(v));
}

/// Total preorder given by ranks: e <= f iff rank[e] <= rank[f].
struct EndpointOrder {
  std::vector<int> rank;

  bool le(int e, int f) const { return rank[e] <= rank[f]; }
  friend bool operator==(const EndpointOrder&, const EndpointOrder&) = default;
};

/// Same preorder with ranks renumbered 0, 1, 2, ... without gaps.
inline EndpointOrder dense(const EndpointOrder& o) {
  std::vector<int> values = o.rank;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  EndpointOrder out;
  out.rank.reserve(o.rank.size());
  for (int r : o.rank)
    out.rank.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), r) - values.begin()));
  return out;
}

/// Realizes per-dimension endpoint orders as integer boxes: every endpoint
/// sits at its dense rank, so coordinates lie in [0, 2n). The result is
/// checked to reproduce every comparison of the input orders.
inline BoxRepresentation realize(std::span<const EndpointOrder> orders, int n) {
  if (orders.empty()) throw Error(ErrorCode::invalid_order, "need at least one dimension");
  std::vector<EndpointOrder> ranked;
  for (const auto& o : orders) {
    if (o.rank.size() != static_cast<std::size_t>(2 * n))
      throw Error(ErrorCode::invalid_order, "order does not cover 2n tokens");
    for (Vertex v = 0; v < n; ++v)
      if (o.rank[left_token(v)] > o.rank[right_token(v)])
        throw Error(ErrorCode::invalid_order, "right end of " + std::to_string(v) + " precedes its left end");
    ranked.push_back(dense(o));
  }
  const int d = static_cast<int>(orders.size());
  BoxRepresentation rep(d);
  for (Vertex v = 0; v < n; ++v) {
    Box b;
    for (int i = 0; i < d; ++i) b.sides.push_back({ranked[i].rank[left_token(v)], ranked[i].rank[right_token(v)]});
    rep.push_back(std::move(b));
  }
  for (int i = 0; i < d; ++i)
    for (int e = 0; e < 2 * n; ++e)
      for (int f = 0; f < 2 * n; ++f) {
        auto coord = [&](int t) { return t % 2 == 0 ? rep[t / 2][i].lo : rep[t / 2][i].hi; };
        if ((coord(e) <= coord(f)) != orders[i].le(e, f))
          throw Error(ErrorCode::verification_failed, "realization changed the order of " + token_name(e) + " and " +
                                                          token_name(f));
      }
  return rep;
}

/// The endpoint orders a concrete representation induces.
inline std::vector<EndpointOrder> extract_orders(const BoxRepresentation& rep) {
  std::vector<EndpointOrder> out;
  for (int i = 0; i < rep.dim(); ++i) {
    std::vector<Coord> coords;
    for (Vertex v = 0; v < rep.size(); ++v) {
      coords.push_back(rep[v][i].lo);
      coords.push_back(rep[v][i].hi);
    }
    std::vector<Coord> values = coords;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    EndpointOrder o;
    for (Coord c : coords)
      o.rank.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin()));
    out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tseitin helpers over a Cnf

class FormulaBuilder {
 public:
  explicit FormulaBuilder(sat::Cnf& cnf) : cnf_(cnf) {}

  Lit truth() {
    if (!true_) {
      true_ = sat::mk_lit(cnf_.new_var());
      cnf_.add({*true_});
    }
    return *true_;
  }

  /// Fresh literal equivalent to the conjunction.
  Lit conj(const std::vector<Lit>& xs) {
    if (xs.empty()) return truth();
    if (xs.size() == 1) return xs[0];
    const Lit t = sat::mk_lit(cnf_.new_var());
    std::vector<Lit> back{t};
    for (Lit x : xs) {
      cnf_.add({~t, x});
      back.push_back(~x);
    }
    cnf_.add(std::move(back));
    return t;
  }

  Lit disj(const std::vector<Lit>& xs) {
    if (xs.empty()) return ~truth();
    if (xs.size() == 1) return xs[0];
    const Lit t = sat::mk_lit(cnf_.new_var());
    std::vector<Lit> fwd{~t};
    for (Lit x : xs) {
      cnf_.add({t, ~x});
      fwd.push_back(x);
    }
    cnf_.add(std::move(fwd));
    return t;
  }

  sat::Cnf& cnf() { return cnf_; }

 private:
  sat::Cnf& cnf_;
  std::optional<Lit> true_;
};

// ---------------------------------------------------------------------------
// Endpoint encoding
//
// Per dimension, one atom le(e, f) for every ordered pair of distinct tokens,
// with totality and transitivity. Edges overlap in every dimension; non-edges
// are separated in at least one. Side constraints compile to formulas over
// the same atoms.

struct EndpointOptions {
  /// Vertex chains whose dimension-1 left ends are forced into nondecreasing
  /// order. Only sound when the listed vertices are interchangeable under an
  /// automorphism of the graph and the side constraints.
  std::vector<std::vector<Vertex>> sorted_left_ends;
};

class EndpointEncoding {
 public:
  struct MapEntry {
    sat::Var var;
    int dim;  // 0-based
    int e, f;
  };

  EndpointEncoding(const Graph& g, int d, const std::vector<SideConstraint>& cons, sat::Cnf& cnf,
                   const EndpointOptions& opts = {})
      : n_(g.n()), d_(d), tokens_(2 * g.n()) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
    validate_constraints(g, d, cons);
    FormulaBuilder fb(cnf);
    const int t = tokens_;
    atom_.assign(static_cast<std::size_t>(d) * t * t, -1);
    for (int i = 0; i < d; ++i)
      for (int e = 0; e < t; ++e)
        for (int f = 0; f < t; ++f)
          if (e != f) {
            const sat::Var v = cnf.new_var();
            atom_[index(i, e, f)] = v;
            map_.push_back({v, i, e, f});
          }
    for (int i = 0; i < d; ++i) {
      for (int e = 0; e < t; ++e)
        for (int f = e + 1; f < t; ++f) cnf.add({le(i, e, f), le(i, f, e)});
      for (int e = 0; e < t; ++e)
        for (int f = 0; f < t; ++f) {
          if (f == e) continue;
          for (int h = 0; h < t; ++h)
            if (h != e && h != f) cnf.add({~le(i, e, f), ~le(i, f, h), le(i, e, h)});
        }
      for (Vertex v = 0; v < n_; ++v) cnf.add({le(i, left_token(v), right_token(v))});
    }
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        if (g.adjacent(u, v)) {
          for (int i = 0; i < d; ++i) {
            cnf.add({le(i, left_token(u), right_token(v))});
            cnf.add({le(i, left_token(v), right_token(u))});
          }
        } else {
          std::vector<Lit> sep;
          for (int i = 0; i < d; ++i) {
            sep.push_back(lt(i, right_token(u), left_token(v)));
            sep.push_back(lt(i, right_token(v), left_token(u)));
          }
          cnf.add(std::move(sep));
        }
      }
    for (const auto& chain : opts.sorted_left_ends)
      for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        cnf.add({le(0, left_token(chain[k]), left_token(chain[k + 1]))});
    for (const auto& sc : cons) encode(sc, fb);
  }

  int n() const noexcept { return n_; }
  int dim() const noexcept { return d_; }
  int tokens() const noexcept { return tokens_; }

  /// Atom for e <= f in dimension i (0-based); e != f.
  Lit le(int i, int e, int f) const { return sat::mk_lit(atom_[index(i, e, f)]); }
  /// e < f  ==  not (f <= e)
  Lit lt(int i, int e, int f) const { return ~le(i, f, e); }

  const std::vector<MapEntry>& var_map() const noexcept { return map_; }

  /// Reads back the per-dimension preorders from an assignment.
  std::vector<EndpointOrder> decode(const std::function<bool(Lit)>& truth) const {
    std::vector<EndpointOrder> out;
    for (int i = 0; i < d_; ++i) {
      EndpointOrder o;
      o.rank.assign(tokens_, 0);
      for (int e = 0; e < tokens_; ++e)
        for (int f = 0; f < tokens_; ++f)
          if (e != f && truth(le(i, f, e)) && !truth(le(i, e, f))) ++o.rank[e];
      out.push_back(std::move(o));
    }
    return out;
  }

  /// Unit clauses pinning every atom of dimension i to the given order.
  void fix_order(int i, const EndpointOrder& o, sat::Cnf& cnf) const {
    for (int e = 0; e < tokens_; ++e)
      for (int f = 0; f < tokens_; ++f)
        if (e != f) cnf.add({o.le(e, f) ? le(i, e, f) : ~le(i, e, f)});
  }

 private:
  std::size_t index(int i, int e, int f) const {
    return (static_cast<std::size_t>(i) * tokens_ + e) * tokens_ + f;
  }

  Lit le_or_true(FormulaBuilder& fb, int i, int e, int f) { return e == f ? fb.truth() : le(i, e, f); }

  // Π_i(inner) ⊆ Π_i(outer)
  std::vector<Lit> contained(FormulaBuilder& fb, int i, Vertex inner, Vertex outer) {
    return {le_or_true(fb, i, left_token(outer), left_token(inner)),
            le_or_true(fb, i, right_token(inner), right_token(outer))};
  }

  Lit overlap(FormulaBuilder& fb, int i, Vertex u, Vertex v) {
    return fb.conj({le_or_true(fb, i, left_token(u), right_token(v)), le_or_true(fb, i, left_token(v), right_token(u))});
  }

  Lit boxes_meet(FormulaBuilder& fb, Vertex u, Vertex v) {
    std::vector<Lit> xs;
    for (int i = 0; i < d_; ++i) xs.push_back(overlap(fb, i, u, v));
    return fb.conj(xs);
  }

  // Π_i(c) ⊆ Π_i(a) ∪ Π_i(b)
  Lit interval_in_union(FormulaBuilder& fb, int i, Vertex c, Vertex a, Vertex b) {
    auto chained = [&](Vertex l, Vertex r) {
      return fb.conj({le_or_true(fb, i, left_token(l), left_token(c)), le_or_true(fb, i, left_token(r), right_token(l)),
                      le_or_true(fb, i, right_token(c), right_token(r))});
    };
    return fb.disj({fb.conj(contained(fb, i, c, a)), fb.conj(contained(fb, i, c, b)), chained(a, b), chained(b, a)});
  }

  // A point p in {max(L_a, L_b), min(R_a, R_b)} of dimension i lies in Π_i(c).
  Lit cap_end_in(FormulaBuilder& fb, int i, Vertex c, Vertex a, Vertex b, bool left_end) {
    auto pick = [&](Vertex x, Vertex y) {
      // x's end is the binding one: L_y <= L_x for left ends, R_x <= R_y for right ends.
      const int ex = left_end ? left_token(x) : right_token(x);
      const int ey = left_end ? left_token(y) : right_token(y);
      const Lit binding = left_end ? le_or_true(fb, i, ey, ex) : le_or_true(fb, i, ex, ey);
      return fb.conj({binding, le_or_true(fb, i, left_token(c), ex), le_or_true(fb, i, ex, right_token(c))});
    };
    return fb.disj({pick(a, b), pick(b, a)});
  }

  void encode(const SideConstraint& sc, FormulaBuilder& fb) {
    sat::Cnf& cnf = fb.cnf();
    std::visit(
        overloaded{
            [&](const RequireCrossing& x) {
              auto one = contained(fb, 0, x.u, x.v), two = contained(fb, 1, x.v, x.u);
              one.insert(one.end(), two.begin(), two.end());
              auto three = contained(fb, 0, x.v, x.u), four = contained(fb, 1, x.u, x.v);
              three.insert(three.end(), four.begin(), four.end());
              cnf.add({fb.conj(one), fb.conj(three)});
            },
            [&](const ForbidCrossing& x) {
              auto one = contained(fb, 0, x.u, x.v), two = contained(fb, 1, x.v, x.u);
              auto three = contained(fb, 0, x.v, x.u), four = contained(fb, 1, x.u, x.v);
              cnf.add({~one[0], ~one[1], ~two[0], ~two[1]});
              cnf.add({~three[0], ~three[1], ~four[0], ~four[1]});
            },
            [&](const RequireBoxInUnion& x) {
              std::vector<Lit> options;
              auto in_a = contained(fb, 0, x.c, x.a), in_a2 = contained(fb, 1, x.c, x.a);
              in_a.insert(in_a.end(), in_a2.begin(), in_a2.end());
              options.push_back(fb.conj(in_a));
              auto in_b = contained(fb, 0, x.c, x.b), in_b2 = contained(fb, 1, x.c, x.b);
              in_b.insert(in_b.end(), in_b2.begin(), in_b2.end());
              options.push_back(fb.conj(in_b));
              for (int i = 0; i < 2; ++i) {
                auto cap = contained(fb, i, x.c, x.a), cap_b = contained(fb, i, x.c, x.b);
                cap.insert(cap.end(), cap_b.begin(), cap_b.end());
                cap.push_back(interval_in_union(fb, 1 - i, x.c, x.a, x.b));
                options.push_back(fb.conj(cap));
              }
              cnf.add(std::move(options));
            },
            [&](const RequireIntersectionContained& x) {
              // c ∩ a empty, or per dimension max(L_c, L_a) >= L_b and min(R_c, R_a) <= R_b.
              std::vector<Lit> parts;
              for (int i = 0; i < d_; ++i) {
                parts.push_back(fb.disj({le_or_true(fb, i, left_token(x.b), left_token(x.c)),
                                         le_or_true(fb, i, left_token(x.b), left_token(x.a))}));
                parts.push_back(fb.disj({le_or_true(fb, i, right_token(x.c), right_token(x.b)),
                                         le_or_true(fb, i, right_token(x.a), right_token(x.b))}));
              }
              cnf.add({~boxes_meet(fb, x.c, x.a), fb.conj(parts)});
            },
            [&](const ForbidProjectionInCap& x) {
              const int i = x.dim - 1;
              // When Π_i(a) ∩ Π_i(b) is empty nothing is inside it.
              auto in_a = contained(fb, i, x.c, x.a), in_b = contained(fb, i, x.c, x.b);
              cnf.add({~in_a[0], ~in_a[1], ~in_b[0], ~in_b[1]});
            },
            [&](const ForbidCornerMembership& x) {
              const Lit first = fb.disj({cap_end_in(fb, 0, x.c, x.a, x.b, true), cap_end_in(fb, 0, x.c, x.a, x.b, false)});
              const Lit second = fb.disj({cap_end_in(fb, 1, x.c, x.a, x.b, true), cap_end_in(fb, 1, x.c, x.a, x.b, false)});
              cnf.add({~boxes_meet(fb, x.a, x.b), ~first, ~second});
            },
        },
        sc);
  }

  int n_, d_, tokens_;
  std::vector<sat::Var> atom_;
  std::vector<MapEntry> map_;
};

// ---------------------------------------------------------------------------
// Strict relations and interval orders

/// Strict relation on [0, n) stored as successor bitsets.
class Relation {
 public:
  explicit Relation(int n = 0) : n_(n), words_((n + 63) / 64), succ_(static_cast<std::size_t>(n) * words_, 0) {}

  int n() const noexcept { return n_; }
  bool has(Vertex u, Vertex v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex u, Vertex v) { succ_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63); }
  const std::uint64_t* row(Vertex u) const { return &succ_[static_cast<std::size_t>(u) * words_]; }
  int words() const noexcept { return words_; }

  int out_degree(Vertex u) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row(u)[w]);
    return c;
  }

 private:
  int n_, words_;
  std::vector<std::uint64_t> succ_;
};

/// One instance of the interval-order axiom
///   before(u,v) ∧ before(x,y) → before(u,y) ∨ before(x,v).
/// With x = v or y = u it is transitivity.
struct TwoPlusTwo {
  int dim;
  Vertex u, v, x, y;
};

/// Every violated axiom instance of `r`, each reported once, at most `limit`.
inline std::vector<TwoPlusTwo> two_plus_two_violations(const Relation& r, int dim, std::size_t limit) {
  std::vector<TwoPlusTwo> out;
  const int n = r.n(), words = r.words();
  // Arc index for deduplication: the clause is symmetric in the two arcs.
  auto arc_id = [n](Vertex a, Vertex b) { return static_cast<long long>(a) * n + b; };
  std::vector<std::uint64_t> bad(words);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (!r.has(u, v)) continue;
      for (Vertex x = 0; x < n; ++x) {
        if (x == u || r.has(x, v)) continue;
        bool any = false;
        for (int w = 0; w < words; ++w) {
          bad[w] = r.row(x)[w] & ~r.row(u)[w];
          any |= bad[w] != 0;
        }
        if (!any) continue;
        bad[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        for (int w = 0; w < words; ++w)
          for (std::uint64_t bits = bad[w]; bits; bits &= bits - 1) {
            const Vertex y = w * 64 + std::countr_zero(bits);
            if (arc_id(u, v) > arc_id(x, y)) continue;
            out.push_back({dim, u, v, x, y});
            if (out.size() >= limit) return out;
          }
      }
    }
  return out;
}

/// Checks that `r` is irreflexive and satisfies every axiom instance.
inline bool is_interval_order(const Relation& r) {
  for (Vertex u = 0; u < r.n(); ++u)
    if (r.has(u, u)) return false;
  return two_plus_two_violations(r, 0, 1).empty();
}

/// Intervals for an interval order: u gets [|Pred(u)|, min over successors
/// v of |Pred(v)| - 1], or n as right end without successors. Then
/// R(u) < L(v) exactly when u precedes v. Throws if `r` is not an interval
/// order.
inline std::vector<Interval> realize_interval_order(const Relation& r) {
  const int n = r.n();
  std::vector<int> preds(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (r.has(u, v)) ++preds[v];
  std::vector<Interval> out(n);
  for (Vertex u = 0; u < n; ++u) {
    Coord right = n;
    for (Vertex v = 0; v < n; ++v)
      if (r.has(u, v)) right = std::min<Coord>(right, preds[v] - 1);
    out[u] = {preds[u], right};
    if (!out[u].valid()) throw Error(ErrorCode::invalid_order, "relation is not an interval order");
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && (out[u].hi < out[v].lo) != r.has(u, v))
        throw Error(ErrorCode::invalid_order, "relation is not an interval order");
  return out;
}

// ---------------------------------------------------------------------------
// Before encoding
//
// Per dimension and ordered pair (u, v), atom before(i,u,v) meaning
// R_i(u) < L_i(v). Atoms for edges are the constant false. Non-edges need
// some dimension with a before in either direction. The interval-order axioms
// are added lazily (refinement) or all at once (export).

class BeforeEncoding {
 public:
  struct MapEntry {
    sat::Var var;
    int dim;
    Vertex u, v;
  };

  BeforeEncoding(const Graph& g, int d, sat::Cnf& cnf) : n_(g.n()), d_(d) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
    atom_.assign(static_cast<std::size_t>(d) * n_ * n_, -1);
    for (int i = 0; i < d; ++i)
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
          if (u != v && !g.adjacent(u, v)) {
            const sat::Var x = cnf.new_var();
            atom_[index(i, u, v)] = x;
            map_.push_back({x, i, u, v});
          }
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        if (g.adjacent(u, v)) continue;
        std::vector<Lit> sep;
        for (int i = 0; i < d; ++i) {
          cnf.add({~*before(i, u, v), ~*before(i, v, u)});
          sep.push_back(*before(i, u, v));
          sep.push_back(*before(i, v, u));
        }
        cnf.add(std::move(sep));
      }
  }

  int n() const noexcept { return n_; }
  int dim() const noexcept { return d_; }

  /// nullopt stands for the constant false (edges, u == v).
  std::optional<Lit> before(int i, Vertex u, Vertex v) const {
    if (u == v) return std::nullopt;
    const sat::Var x = atom_[index(i, u, v)];
    if (x < 0) return std::nullopt;
    return sat::mk_lit(x);
  }

  /// Clause for one axiom instance after constant folding; nullopt when it
  /// is vacuous or tautological.
  std::optional<std::vector<Lit>> axiom(const TwoPlusTwo& q) const {
    const auto p1 = before(q.dim, q.u, q.v), p2 = before(q.dim, q.x, q.y);
    if (!p1 || !p2) return std::nullopt;
    std::vector<Lit> c{~*p1, ~*p2};
    for (auto h : {before(q.dim, q.u, q.y), before(q.dim, q.x, q.v)}) {
      if (!h) continue;
      if (*h == *p1 || *h == *p2) return std::nullopt;
      c.push_back(*h);
    }
    return c;
  }

  /// Adds the complete axiom family; throws if it would exceed `cap` clauses.
  std::size_t add_all_axioms(sat::Cnf& cnf, std::size_t cap) const {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (atom_[index(0, u, v)] >= 0) arcs.emplace_back(u, v);
    const std::size_t estimate = static_cast<std::size_t>(d_) * arcs.size() * (arcs.size() + 1) / 2;
    if (estimate > cap)
      throw Error(ErrorCode::too_large, "eager axiom family has about " + std::to_string(estimate) +
                                            " clauses, cap is " + std::to_string(cap));
    std::size_t added = 0;
    for (int i = 0; i < d_; ++i)
      for (std::size_t p = 0; p < arcs.size(); ++p)
        for (std::size_t q = p; q < arcs.size(); ++q)
          if (auto c = axiom({i, arcs[p].first, arcs[p].second, arcs[q].first, arcs[q].second})) {
            cnf.add(std::move(*c));
            ++added;
          }
    return added;
  }

  std::vector<Relation> decode(const std::function<bool(Lit)>& truth) const {
    std::vector<Relation> out;
    for (int i = 0; i < d_; ++i) {
      Relation r(n_);
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
          if (auto b = before(i, u, v); b && truth(*b)) r.set(u, v);
      out.push_back(std::move(r));
    }
    return out;
  }

  const std::vector<MapEntry>& var_map() const noexcept { return map_; }

 private:
  std::size_t index(int i, Vertex u, Vertex v) const { return (static_cast<std::size_t>(i) * n_ + u) * n_ + v; }

  int n_, d_;
  std::vector<sat::Var> atom_;
  std::vector<MapEntry> map_;
};

/// Boxes from per-dimension interval orders.
inline BoxRepresentation realize_relations(const std::vector<Relation>& rels, int n) {
  BoxRepresentation rep(static_cast<int>(rels.size()));
  std::vector<std::vector<Interval>> per_dim;
  for (const auto& r : rels) per_dim.push_back(realize_interval_order(r));
  for (Vertex v = 0; v < n; ++v) {
    Box b;
    for (const auto& d : per_dim) b.sides.push_back(d[v]);
    rep.push_back(std::move(b));
  }
  return rep;
}

}  // namespace boxkit

#endif  // BOXKIT_ENCODING_HPP

#ifndef BOXKIT_GADGETS_HPP
#define BOXKIT_GADGETS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "boxkit/error.hpp"
#include "boxkit/graph.hpp"

namespace boxkit {

enum class GadgetName { L1, L2, L3, L4, G };

struct GadgetSpec {
  GadgetName name = GadgetName::G;
  int k = 5;  // fan width
};

inline std::string to_string(GadgetName name) {
  switch (name) {
    case GadgetName::L1: return "L1";
    case GadgetName::L2: return "L2";
    case GadgetName::L3: return "L3";
    case GadgetName::L4: return "L4";
    case GadgetName::G: return "G";
  }
  return "?";
}

inline GadgetName parse_gadget_name(const std::string& s) {
  if (s == "L1") return GadgetName::L1;
  if (s == "L2") return GadgetName::L2;
  if (s == "L3") return GadgetName::L3;
  if (s == "L4") return GadgetName::L4;
  if (s == "G") return GadgetName::G;
  throw Error(ErrorCode::invalid_argument, "unknown gadget '" + s + "'");
}

/// Label helpers: c3, d2_4, ...
inline std::string role(const std::string& family, int i) { return family + std::to_string(i); }
inline std::string role(const std::string& family, int i, int j) {
  return family + std::to_string(i) + "_" + std::to_string(j);
}

namespace detail {

class GadgetBuilder {
 public:
  GadgetBuilder() : g_(Graph::from_edges(2, {{0, 1}})) {
    g_ = g_.with_label("a", 0).with_label("b", 1);
  }

  Vertex split(const std::string& u, const std::string& v, const std::string& name) {
    auto [next, w] = split_edge(g_, g_.at(u), g_.at(v));
    g_ = next.with_label(name, w);
    return w;
  }

  Vertex pendant(const std::string& u, const std::string& name) {
    auto [next, w] = add_pendant(g_, g_.at(u));
    g_ = next.with_label(name, w);
    return w;
  }

  Graph take() && { return std::move(g_); }

 private:
  Graph g_;
};

inline void build_l3(GadgetBuilder& b, int k) {
  for (int i = 1; i <= k; ++i) b.split("a", "b", role("c", i));
  for (int i = 1; i <= k; ++i) {
    b.split("a", role("c", i), role("x", i));
    b.split("b", role("c", i), role("y", i));
  }
}

}  // namespace detail

/// Builds the labelled gadget by replaying its split recipe from K2 = (a, b).
/// Vertex indices follow the construction order, so identical specs give
/// identical graphs.
inline Graph build_gadget(const GadgetSpec& spec) {
  if (spec.k < 1) throw Error(ErrorCode::invalid_argument, "fan width k must be >= 1");
  detail::GadgetBuilder b;
  const int k = spec.k;
  switch (spec.name) {
    case GadgetName::L1:
      b.split("a", "b", "c");
      b.pendant("c", "z");
      break;
    case GadgetName::L2:
      b.split("a", "b", "c");
      b.split("a", "c", "x");
      b.split("b", "c", "y");
      break;
    case GadgetName::L3:
      detail::build_l3(b, k);
      break;
    case GadgetName::L4:
      detail::build_l3(b, k);
      for (int i = 1; i <= k; ++i) b.split(role("x", i), role("c", i), role("z", i));
      break;
    case GadgetName::G:
      for (int i = 1; i <= k; ++i) b.split("a", "b", role("c", i));
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) b.split("a", role("c", i), role("d", i, j));
        for (int j = 1; j <= k; ++j) b.split("b", role("c", i), role("e", i, j));
      }
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          b.split("a", role("d", i, j), role("p", i, j));
          b.split(role("c", i), role("d", i, j), role("q", i, j));
          b.split("b", role("e", i, j), role("r", i, j));
          b.split(role("c", i), role("e", i, j), role("s", i, j));
        }
      break;
  }
  return std::move(b).take();
}

// ---------------------------------------------------------------------------
// Gadgets embedded in G

enum class Side { a_side, b_side };

struct SubgadgetQuery {
  GadgetName kind = GadgetName::L4;  // L4 or L3
  int i = 1;                         // fan index, L3 only
  Side side = Side::a_side;          // L3 only
};

/// A vertex subset of G together with the explicit map from the gadget's
/// labels to vertices of G.
struct Embedding {
  std::string description;
  GadgetSpec gadget;
  std::vector<Vertex> vertices;                // in G, ordered by gadget vertex index
  std::map<std::string, std::string> mapping;  // gadget label -> G label
};

inline Embedding embedded_subgadget(const Graph& g, int k, const SubgadgetQuery& q) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "fan width k must be >= 1");
  Embedding emb;
  if (q.kind == GadgetName::L4) {
    emb.description = "L4";
    emb.gadget = {GadgetName::L4, k};
    emb.mapping["a"] = "a";
    emb.mapping["b"] = "b";
    for (int i = 1; i <= k; ++i) {
      emb.mapping[role("c", i)] = role("c", i);
      emb.mapping[role("x", i)] = role("d", i, 1);
      emb.mapping[role("y", i)] = role("e", i, 1);
      emb.mapping[role("z", i)] = role("q", i, 1);
    }
  } else if (q.kind == GadgetName::L3) {
    if (q.i < 1 || q.i > k)
      throw Error(ErrorCode::invalid_argument, "fan index " + std::to_string(q.i) + " out of range");
    const bool a_side = q.side == Side::a_side;
    emb.description = "L3 at c" + std::to_string(q.i) + (a_side ? " (a-side)" : " (b-side)");
    emb.gadget = {GadgetName::L3, k};
    emb.mapping["a"] = a_side ? "a" : "b";
    emb.mapping["b"] = role("c", q.i);
    for (int j = 1; j <= k; ++j) {
      emb.mapping[role("c", j)] = role(a_side ? "d" : "e", q.i, j);
      emb.mapping[role("x", j)] = role(a_side ? "p" : "r", q.i, j);
      emb.mapping[role("y", j)] = role(a_side ? "q" : "s", q.i, j);
    }
  } else {
    throw Error(ErrorCode::invalid_argument, "only L3 and L4 embed in G");
  }
  const Graph gadget = build_gadget(emb.gadget);
  emb.vertices.assign(gadget.n(), -1);
  for (const auto& [from, to] : emb.mapping) emb.vertices[gadget.at(from)] = g.at(to);
  return emb;
}

/// True iff the embedding's label map is a bijection onto its vertex set and
/// an isomorphism between the gadget and the induced subgraph of `g`.
inline bool embedding_is_isomorphism(const Graph& g, const Embedding& emb, std::string* why = nullptr) {
  const Graph gadget = build_gadget(emb.gadget);
  if (emb.vertices.size() != static_cast<std::size_t>(gadget.n()) ||
      emb.mapping.size() != gadget.labels().size()) {
    if (why) *why = "label map does not cover the gadget";
    return false;
  }
  std::set<Vertex> image(emb.vertices.begin(), emb.vertices.end());
  if (image.size() != emb.vertices.size() || image.count(-1)) {
    if (why) *why = "label map is not injective";
    return false;
  }
  const Graph sub = induced_subgraph(g, emb.vertices);
  for (Vertex u = 0; u < gadget.n(); ++u)
    for (Vertex v = u + 1; v < gadget.n(); ++v)
      if (gadget.adjacent(u, v) != sub.adjacent(u, v)) {
        if (why)
          *why = "adjacency differs on " + gadget.display_name(u) + "~" + gadget.display_name(v) +
                 " -> " + g.display_name(emb.vertices[u]) + "~" + g.display_name(emb.vertices[v]);
        return false;
      }
  return true;
}

}  // namespace boxkit

#endif  // BOXKIT_GADGETS_HPP

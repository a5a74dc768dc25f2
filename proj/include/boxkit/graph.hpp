#ifndef BOXKIT_GRAPH_HPP
#define BOXKIT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/error.hpp"

namespace boxkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range [0, n) with optional
/// role labels. Values are immutable once built; the construction
/// primitives below return new graphs.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n) {
    if (n < 0) throw Error(ErrorCode::invalid_argument, "negative vertex count");
  }

  /// Builds a graph from an edge list, rejecting self-loops, duplicates and
  /// out-of-range endpoints. Pairs may be given in either orientation.
  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      g.check_vertex(u);
      g.check_vertex(v);
      if (u == v) throw Error(ErrorCode::self_loop, "self-loop at " + std::to_string(u));
      if (g.adjacent(u, v))
        throw Error(ErrorCode::duplicate_edge,
                    "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g.insert_edge(u, v);
    }
    return g;
  }

  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  std::size_t degree(Vertex v) const { return nbrs_[v].size(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  const std::map<std::string, Vertex>& labels() const noexcept { return labels_; }

  std::optional<Vertex> find_label(const std::string& name) const {
    auto it = labels_.find(name);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
  }

  Vertex at(const std::string& name) const {
    auto v = find_label(name);
    if (!v) throw Error(ErrorCode::bad_label, "no vertex labelled '" + name + "'");
    return *v;
  }

  std::optional<std::string> label_of(Vertex v) const {
    for (const auto& [name, idx] : labels_)
      if (idx == v) return name;
    return std::nullopt;
  }

  /// Name used in human-facing output: the label if present, else the index.
  std::string display_name(Vertex v) const {
    auto l = label_of(v);
    return l ? *l : std::to_string(v);
  }

  Graph with_label(const std::string& name, Vertex v) const {
    check_vertex(v);
    if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos)
      throw Error(ErrorCode::bad_label, "label '" + name + "' is empty or contains whitespace");
    auto existing = find_label(name);
    if (existing && *existing != v)
      throw Error(ErrorCode::bad_label, "label '" + name + "' already names another vertex");
    auto other = label_of(v);
    if (other && *other != name)
      throw Error(ErrorCode::bad_label,
                  "vertex " + std::to_string(v) + " already labelled '" + *other + "'");
    Graph g = *this;
    g.labels_[name] = v;
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorCode::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n_) + ")");
  }

 private:
  friend Graph add_vertex(const Graph& g, const std::vector<Vertex>& nbrs);
  friend std::pair<Graph, Vertex> series_subdivide(const Graph& g, Vertex u, Vertex v);

  void insert_edge(Vertex u, Vertex v) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    ++edge_count_;
  }

  void erase_edge(Vertex u, Vertex v) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = 0;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
    std::erase(nbrs_[u], v);
    std::erase(nbrs_[v], u);
    --edge_count_;
  }

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::map<std::string, Vertex> labels_;
};

/// New graph with one extra vertex (index n) adjacent to `nbrs`.
inline Graph add_vertex(const Graph& g, const std::vector<Vertex>& nbrs) {
  Graph out(g.n() + 1);
  out.labels_ = g.labels_;
  for (auto [u, v] : g.edges()) out.insert_edge(u, v);
  const Vertex w = g.n();
  for (Vertex u : nbrs) {
    g.check_vertex(u);
    if (!out.adjacent(u, w)) out.insert_edge(u, w);
  }
  return out;
}

/// Split on edge (u, v): new vertex adjacent to u and v, (u, v) kept.
inline std::pair<Graph, Vertex> split_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.adjacent(u, v))
    throw Error(ErrorCode::not_an_edge,
                "cannot split non-edge " + std::to_string(u) + " " + std::to_string(v));
  return {add_vertex(g, {u, v}), g.n()};
}

inline std::pair<Graph, Vertex> add_pendant(const Graph& g, Vertex u) {
  g.check_vertex(u);
  return {add_vertex(g, {u}), g.n()};
}

/// Series operation: replaces edge (u, v) by the path u - y - v.
inline std::pair<Graph, Vertex> series_subdivide(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.adjacent(u, v))
    throw Error(ErrorCode::not_an_edge,
                "cannot subdivide non-edge " + std::to_string(u) + " " + std::to_string(v));
  Graph out = add_vertex(g, {u, v});
  out.erase_edge(u, v);
  return {out, g.n()};
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, e);
}

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
/// Labels are dropped.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph::from_edges(static_cast<int>(vertices.size()), e);
}

inline bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  return g.m() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// No-K4-minor test by reduction: vertices of degree <= 1 are deleted and
/// degree-2 vertices are suppressed (parallel edges collapse automatically).
/// The graph is series-parallel iff everything is eliminated. For a
/// disconnected graph this is the conjunction over its components.
inline bool is_series_parallel(const Graph& g) {
  const int n = g.n();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(n, 1), queued(n, 0);
  std::deque<Vertex> work;
  auto push = [&](Vertex v) {
    if (alive[v] && !queued[v] && adj[v].size() <= 2) {
      queued[v] = 1;
      work.push_back(v);
    }
  };
  for (Vertex v = 0; v < n; ++v) push(v);
  int remaining = n;
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    queued[v] = 0;
    if (!alive[v] || adj[v].size() > 2) continue;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex w : nb) adj[w].erase(v);
    adj[v].clear();
    alive[v] = 0;
    --remaining;
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    for (Vertex w : nb) push(w);
  }
  return remaining == 0;
}

/// 2-tree test: peel simplicial degree-2 vertices until a triangle remains.
inline bool is_2_tree(const Graph& g) {
  const int n = g.n();
  if (n < 3) return false;
  if (g.m() != 2 * static_cast<std::size_t>(n) - 3) return false;
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(n, 1);
  auto simplicial2 = [&](Vertex v) {
    if (!alive[v] || adj[v].size() != 2) return false;
    Vertex x = *adj[v].begin(), y = *std::next(adj[v].begin());
    return adj[x].count(y) > 0;
  };
  std::vector<Vertex> work;
  for (Vertex v = 0; v < n; ++v)
    if (simplicial2(v)) work.push_back(v);
  int remaining = n;
  while (remaining > 3 && !work.empty()) {
    Vertex v = work.back();
    work.pop_back();
    if (!simplicial2(v)) continue;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex w : nb) adj[w].erase(v);
    adj[v].clear();
    alive[v] = 0;
    --remaining;
    for (Vertex w : nb)
      if (simplicial2(w)) work.push_back(w);
  }
  if (remaining != 3) return false;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(v);
  return adj[rest[0]].count(rest[1]) && adj[rest[0]].count(rest[2]) && adj[rest[1]].count(rest[2]);
}

// ---------------------------------------------------------------------------
// Text format
//
//   # comment
//   # label <name> <index>
//   n m
//   u v        (m lines)

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  std::vector<std::pair<Vertex, std::string>> labels;
  for (const auto& [name, v] : g.labels()) labels.emplace_back(v, name);
  std::sort(labels.begin(), labels.end());
  for (const auto& [v, name] : labels) out << "# label " << name << ' ' << v << '\n';
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::vector<std::pair<std::string, long long>> labels;
  std::set<Edge> seen;
  int lineno = 0;
  auto where = [&] { return "line " + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      std::vector<std::string> rest = toks;
      if (rest[0] == "#") rest.erase(rest.begin());
      else rest[0] = rest[0].substr(1);
      if (!rest.empty() && rest[0] == "label") {
        long long idx = 0;
        if (rest.size() != 3 || !detail::parse_int(rest[2], idx))
          throw Error(ErrorCode::bad_label, where() + ": expected '# label <name> <index>'");
        labels.emplace_back(rest[1], idx);
      }
      continue;
    }
    if (!header) {
      long long n = 0, m = 0;
      if (toks.size() != 2 || !detail::parse_int(toks[0], n) || !detail::parse_int(toks[1], m) ||
          n < 0 || m < 0)
        throw Error(ErrorCode::malformed_header, where() + ": expected 'n m'");
      if (m > n * (n - 1) / 2)
        throw Error(ErrorCode::malformed_header, where() + ": more edges than vertex pairs");
      header = {n, m};
      continue;
    }
    long long u = 0, v = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
      throw Error(ErrorCode::malformed_edge, where() + ": expected 'u v'");
    if (u < 0 || v < 0 || u >= header->first || v >= header->first)
      throw Error(ErrorCode::vertex_out_of_range, where() + ": endpoint out of range");
    if (u == v) throw Error(ErrorCode::self_loop, where() + ": self-loop");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) throw Error(ErrorCode::duplicate_edge, where() + ": duplicate edge");
    if (static_cast<long long>(edges.size()) >= header->second)
      throw Error(ErrorCode::edge_count_mismatch, where() + ": more edge lines than declared");
    edges.push_back(e);
  }
  if (!header) throw Error(ErrorCode::malformed_header, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != header->second)
    throw Error(ErrorCode::edge_count_mismatch,
                "declared " + std::to_string(header->second) + " edges, found " +
                    std::to_string(edges.size()));
  Graph g = Graph::from_edges(static_cast<int>(header->first), edges);
  for (const auto& [name, idx] : labels) {
    if (idx < 0 || idx >= g.n())
      throw Error(ErrorCode::vertex_out_of_range, "label '" + name + "' index out of range");
    g = g.with_label(name, static_cast<Vertex>(idx));
  }
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

}  // namespace boxkit

#endif  // BOXKIT_GRAPH_HPP

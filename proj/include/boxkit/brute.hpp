#ifndef BOXKIT_BRUTE_HPP
#define BOXKIT_BRUTE_HPP

// Exhaustive oracle for tiny graphs, independent of the SAT machinery.
//
// A dimension of a representation is an interval graph H containing G. Each
// such H comes from a left-to-right sweep over endpoints in which every step
// opens or closes one interval (ties between a left and a right end can
// always be broken toward the left end, ties among equal kinds do not
// matter). We enumerate all sweeps with memoisation on the sweep state, keep
// the supergraphs of G, and then look for d of them whose edge sets
// intersect to exactly E(G). Only inclusion-minimal supergraphs need to be
// tried: shrinking one factor can only shrink the intersection, which never
// drops below E(G).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "boxkit/error.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"

namespace boxkit {

inline constexpr int kBruteMaxVertices = 7;

class BruteForceOracle {
 public:
  explicit BruteForceOracle(const Graph& g) : g_(g), n_(g.n()) {
    if (n_ > kBruteMaxVertices)
      throw Error(ErrorCode::unsupported, "brute engine handles at most " + std::to_string(kBruteMaxVertices) +
                                              " vertices, got " + std::to_string(n_));
    pair_bit_.assign(static_cast<std::size_t>(n_) * n_, 0);
    int bit = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        pair_bit_[u * n_ + v] = pair_bit_[v * n_ + u] = bit++;
        if (g.adjacent(u, v)) target_ |= std::uint32_t{1} << pair_bit_[u * n_ + v];
      }
    enumerate();
  }

  /// All interval supergraphs of G (edge bitmasks), inclusion-minimal ones only.
  const std::vector<std::uint32_t>& minimal_supergraphs() const noexcept { return minimal_; }

  /// A d-box representation if one exists, else nullopt. Complete for d >= 1.
  std::optional<BoxRepresentation> solve(int d) const {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
    if (n_ == 0) return BoxRepresentation(d);
    std::vector<std::size_t> pick;
    if (!search(d, 0, full_mask(), pick))
      return std::nullopt;
    BoxRepresentation rep(d);
    std::vector<std::vector<Interval>> dims;
    for (std::size_t idx : pick) dims.push_back(intervals_of(witness_.at(minimal_[idx])));
    while (static_cast<int>(dims.size()) < d) dims.push_back(std::vector<Interval>(n_, Interval{0, 0}));
    for (Vertex v = 0; v < n_; ++v) {
      Box b;
      for (const auto& dim : dims) b.sides.push_back(dim[v]);
      rep.push_back(std::move(b));
    }
    return rep;
  }

 private:
  // Sweep event: vertex v opened (+) or closed (-), encoded as v or ~v.
  using Sweep = std::vector<int>;

  std::uint32_t full_mask() const {
    const int pairs = n_ * (n_ - 1) / 2;
    return pairs == 0 ? 0u : (pairs >= 32 ? ~0u : ((std::uint32_t{1} << pairs) - 1));
  }

  bool search(int remaining, std::size_t from, std::uint32_t acc, std::vector<std::size_t>& pick) const {
    acc &= full_mask();
    if (acc == target_) return true;
    if (remaining == 0) return false;
    for (std::size_t i = from; i < minimal_.size(); ++i) {
      pick.push_back(i);
      if (search(remaining - 1, i, acc & minimal_[i], pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  std::vector<Interval> intervals_of(const Sweep& s) const {
    std::vector<Interval> out(n_);
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      if (s[pos] >= 0)
        out[s[pos]].lo = static_cast<Coord>(pos);
      else
        out[~s[pos]].hi = static_cast<Coord>(pos);
    }
    return out;
  }

  void enumerate() {
    Sweep path;
    dfs(0, 0, 0, path);
    std::vector<std::uint32_t> all;
    for (const auto& [mask, sweep] : witness_) all.push_back(mask);
    std::sort(all.begin(), all.end());
    for (std::uint32_t h : all) {
      bool minimal = true;
      for (std::uint32_t o : all)
        if (o != h && (o & h) == o) {
          minimal = false;
          break;
        }
      if (minimal) minimal_.push_back(h);
    }
  }

  void dfs(std::uint32_t opened, std::uint32_t closed, std::uint32_t edges, Sweep& path) {
    const std::uint32_t all = (std::uint32_t{1} << n_) - 1;
    const std::uint64_t key = opened | (std::uint64_t{closed} << 8) | (std::uint64_t{edges} << 16);
    if (!visited_.insert(key).second) return;
    if (closed == all) {
      witness_.emplace(edges, path);
      return;
    }
    const std::uint32_t open_now = opened & ~closed;
    for (Vertex v = 0; v < n_; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (!(opened & bit)) {
        std::uint32_t e = edges;
        for (Vertex w = 0; w < n_; ++w)
          if (open_now & (std::uint32_t{1} << w)) e |= std::uint32_t{1} << pair_bit_[v * n_ + w];
        path.push_back(v);
        dfs(opened | bit, closed, e, path);
        path.pop_back();
      } else if (open_now & bit) {
        // Closing v ends its chances to meet anyone: all G-neighbours must be met.
        bool ok = true;
        for (Vertex w : g_.neighbors(v))
          if (!(edges & (std::uint32_t{1} << pair_bit_[v * n_ + w]))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        path.push_back(~v);
        dfs(opened, closed | bit, edges, path);
        path.pop_back();
      }
    }
  }

  Graph g_;
  int n_;
  std::vector<int> pair_bit_;
  std::uint32_t target_ = 0;
  std::unordered_set<std::uint64_t> visited_;
  std::unordered_map<std::uint32_t, Sweep> witness_;
  std::vector<std::uint32_t> minimal_;
};

}  // namespace boxkit

#endif  // BOXKIT_BRUTE_HPP

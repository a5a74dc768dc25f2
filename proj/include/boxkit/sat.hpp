#ifndef BOXKIT_SAT_HPP
#define BOXKIT_SAT_HPP

// Conflict-driven clause learning over a flat clause arena: two watched
// literals with blockers, first-UIP learning with recursive minimisation,
// VSIDS branching, phase saving, Luby restarts and activity/LBD based
// learnt-clause reduction. Refutations are exhaustive; only the Limits
// passed to solve() can make it give up.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace boxkit::sat {

using Var = int;

struct Lit {
  int x = -2;  // 2 * var + sign; sign set means negated

  constexpr Var var() const noexcept { return x >> 1; }
  constexpr bool sign() const noexcept { return x & 1; }
  constexpr Lit operator~() const noexcept { return Lit{x ^ 1}; }
  friend constexpr bool operator==(Lit, Lit) = default;
  friend constexpr auto operator<=>(Lit, Lit) = default;
};

constexpr Lit mk_lit(Var v, bool negated = false) noexcept { return Lit{2 * v + (negated ? 1 : 0)}; }
inline constexpr Lit lit_undef{-2};

/// DIMACS integer <-> literal (variables are 0-based internally).
constexpr int to_dimacs(Lit l) noexcept { return l.sign() ? -(l.var() + 1) : l.var() + 1; }
constexpr Lit from_dimacs(int d) noexcept { return d > 0 ? mk_lit(d - 1) : mk_lit(-d - 1, true); }

enum class LBool : std::uint8_t { False = 0, True = 1, Undef = 2 };

inline LBool lbool_of(bool b) noexcept { return b ? LBool::True : LBool::False; }

enum class Result { sat, unsat, unknown };

struct Stats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t learned = 0;  // total learnt clauses produced
  std::uint64_t restarts = 0;
  std::uint64_t reductions = 0;
  std::uint64_t clauses = 0;  // original clauses currently stored
  std::uint64_t learnts = 0;  // learnt clauses currently stored
  std::uint64_t arena_bytes = 0;
};

/// Stop conditions for one solve() call. Absent fields are unlimited.
struct Limits {
  std::optional<std::uint64_t> conflicts;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<std::size_t> memory_bytes;
  const std::atomic<bool>* cancel = nullptr;
};

/// Plain clause list, used to build encodings before loading them into a
/// solver or writing them out as DIMACS.
/// Clauses stored back to back in one literal array; iterating yields spans.
class ClauseList {
 public:
  class iterator {
   public:
    using value_type = std::span<const Lit>;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const ClauseList* list, std::size_t i) : list_(list), i_(i) {}
    std::span<const Lit> operator*() const { return (*list_)[i_]; }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const ClauseList* list_ = nullptr;
    std::size_t i_ = 0;
  };

  std::size_t size() const noexcept { return ends_.size(); }
  bool empty() const noexcept { return ends_.empty(); }
  std::span<const Lit> operator[](std::size_t i) const {
    const std::size_t lo = i == 0 ? 0 : ends_[i - 1];
    return {lits_.data() + lo, ends_[i] - lo};
  }
  std::span<const Lit> back() const { return (*this)[size() - 1]; }
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

  void push_back(std::span<const Lit> c) {
    lits_.insert(lits_.end(), c.begin(), c.end());
    ends_.push_back(lits_.size());
  }
  void reserve(std::size_t clauses, std::size_t lits) {
    ends_.reserve(clauses);
    lits_.reserve(lits);
  }

 private:
  std::vector<Lit> lits_;
  std::vector<std::size_t> ends_;
};

struct Cnf {
  int num_vars = 0;
  ClauseList clauses;

  Var new_var() { return num_vars++; }
  void add(std::span<const Lit> c) { clauses.push_back(c); }
  void add(std::initializer_list<Lit> c) { clauses.push_back(std::span<const Lit>(c.begin(), c.size())); }
};

class Solver {
 public:
  explicit Solver(std::uint64_t seed = 0) : rng_(seed) { seed_ = seed; }

  Var new_var() {
    const Var v = static_cast<Var>(assigns_.size());
    assigns_.push_back(LBool::Undef);
    level_.push_back(0);
    reason_.push_back(kNoReason);
    seen_.push_back(0);
    polarity_.push_back(1);  // prefer false first
    // A seeded, tiny initial activity perturbs branching order only.
    activity_.push_back(seed_ == 0 ? 0.0 : std::uniform_real_distribution<double>(0, 1e-5)(rng_));
    heap_index_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v;
  }

  void reserve_vars(int n) {
    while (num_vars() < n) new_var();
  }

  int num_vars() const noexcept { return static_cast<int>(assigns_.size()); }
  bool okay() const noexcept { return ok_; }

  /// Adds a problem clause. Must be called at decision level 0 (any time
  /// outside solve()). Returns false once the formula is known unsatisfiable.
  bool add_clause(std::span<const Lit> lits) {
    if (!ok_) return false;
    cancel_until(0);
    tmp_.assign(lits.begin(), lits.end());
    for (Lit l : tmp_) reserve_vars(l.var() + 1);
    std::sort(tmp_.begin(), tmp_.end());
    std::size_t j = 0;
    Lit prev = lit_undef;
    for (Lit l : tmp_) {
      if (value(l) == LBool::True || l == ~prev) return true;  // satisfied or tautology
      if (value(l) != LBool::False && l != prev) tmp_[j++] = prev = l;
    }
    tmp_.resize(j);
    if (tmp_.empty()) return ok_ = false;
    if (tmp_.size() == 1) {
      enqueue(tmp_[0], kNoReason);
      return ok_ = (propagate() == kNoReason);
    }
    const CRef cr = alloc_clause(tmp_, false, 0);
    clauses_.push_back(cr);
    attach(cr);
    ++stats_.clauses;
    return true;
  }

  bool add_clause(std::initializer_list<Lit> lits) {
    return add_clause(std::span<const Lit>(lits.begin(), lits.size()));
  }

  void load(const Cnf& cnf) {
    reserve_vars(cnf.num_vars);
    for (const auto& c : cnf.clauses) add_clause(c);
  }

  Result solve(const Limits& limits = {}) {
    model_.clear();
    if (!ok_) return Result::unsat;
    limits_ = limits;
    conflicts_at_start_ = stats_.conflicts;
    if (max_learnts_ == 0) max_learnts_ = std::max<double>(2000.0, stats_.clauses / 3.0);
    Result status = Result::unknown;
    for (int curr = 0; status == Result::unknown; ++curr) {
      const double budget = luby(2.0, curr) * kRestartFirst;
      status = search(static_cast<std::uint64_t>(budget));
      if (status == Result::unknown && out_of_budget()) break;
      if (status == Result::unknown) ++stats_.restarts;
    }
    if (status == Result::sat) {
      model_.assign(assigns_.begin(), assigns_.end());
    } else if (status == Result::unsat) {
      ok_ = false;
    }
    cancel_until(0);
    return status;
  }

  LBool model_value(Var v) const { return model_.at(v); }
  bool model_true(Lit l) const {
    const LBool b = model_.at(l.var());
    return b != LBool::Undef && (b == LBool::True) != l.sign();
  }
  const std::vector<LBool>& model() const noexcept { return model_; }

  const Stats& stats() const noexcept {
    stats_.arena_bytes = arena_.size() * sizeof(std::uint32_t);
    return stats_;
  }

  /// Called every `every` conflicts during search.
  void set_progress(std::function<void(const Stats&)> fn, std::uint64_t every) {
    progress_ = std::move(fn);
    progress_every_ = std::max<std::uint64_t>(1, every);
  }

 private:
  using CRef = std::uint32_t;
  static constexpr CRef kNoReason = 0xFFFFFFFFu;
  static constexpr double kRestartFirst = 100;
  static constexpr double kVarDecay = 0.95;
  static constexpr double kClauseDecay = 0.999;

  struct Watcher {
    CRef cref;
    Lit blocker;
  };

  // Arena layout per clause: [size][flags: learnt | deleted<<1 | lbd<<2][activity bits][lits...]
  static constexpr std::size_t kHeader = 3;

  std::uint32_t csize(CRef c) const { return arena_[c]; }
  bool clearnt(CRef c) const { return arena_[c + 1] & 1u; }
  bool cdeleted(CRef c) const { return arena_[c + 1] & 2u; }
  std::uint32_t clbd(CRef c) const { return arena_[c + 1] >> 2; }
  void set_lbd(CRef c, std::uint32_t lbd) { arena_[c + 1] = (arena_[c + 1] & 3u) | (lbd << 2); }
  Lit* clits(CRef c) { return reinterpret_cast<Lit*>(&arena_[c + kHeader]); }
  const Lit* clits(CRef c) const { return reinterpret_cast<const Lit*>(&arena_[c + kHeader]); }
  float cact(CRef c) const {
    float f;
    std::memcpy(&f, &arena_[c + 2], sizeof f);
    return f;
  }
  void set_cact(CRef c, float f) { std::memcpy(&arena_[c + 2], &f, sizeof f); }

  CRef alloc_clause(const std::vector<Lit>& lits, bool learnt, std::uint32_t lbd) {
    static_assert(sizeof(Lit) == sizeof(std::uint32_t));
    const CRef cr = static_cast<CRef>(arena_.size());
    arena_.push_back(static_cast<std::uint32_t>(lits.size()));
    arena_.push_back((learnt ? 1u : 0u) | (lbd << 2));
    arena_.push_back(0);
    for (Lit l : lits) arena_.push_back(static_cast<std::uint32_t>(l.x));
    return cr;
  }

  void free_clause(CRef c) {
    arena_[c + 1] |= 2u;
    wasted_ += kHeader + csize(c);
  }

  LBool value(Lit l) const {
    const LBool b = assigns_[l.var()];
    if (b == LBool::Undef) return b;
    return lbool_of((b == LBool::True) != l.sign());
  }
  LBool value(Var v) const { return assigns_[v]; }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void attach(CRef c) {
    const Lit* l = clits(c);
    watches_[(~l[0]).x].push_back({c, l[1]});
    watches_[(~l[1]).x].push_back({c, l[0]});
  }

  bool locked(CRef c) const {
    const Lit l0 = clits(c)[0];
    return value(l0) == LBool::True && reason_[l0.var()] == c;
  }

  void enqueue(Lit p, CRef from) {
    assigns_[p.var()] = lbool_of(!p.sign());
    level_[p.var()] = decision_level();
    reason_[p.var()] = from;
    trail_.push_back(p);
  }

  CRef propagate() {
    CRef confl = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];
      auto& ws = watches_[p.x];
      ++stats_.propagations;
      std::size_t i = 0, j = 0;
      const std::size_t end = ws.size();
      const Lit false_lit = ~p;
      while (i < end) {
        const Lit blocker = ws[i].blocker;
        if (value(blocker) == LBool::True) {
          ws[j++] = ws[i++];
          continue;
        }
        const CRef cr = ws[i].cref;
        Lit* c = clits(cr);
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        ++i;
        const Lit first = c[0];
        const Watcher w{cr, first};
        if (first != blocker && value(first) == LBool::True) {
          ws[j++] = w;
          continue;
        }
        const std::uint32_t sz = csize(cr);
        bool moved = false;
        for (std::uint32_t k = 2; k < sz; ++k) {
          if (value(c[k]) != LBool::False) {
            c[1] = c[k];
            c[k] = false_lit;
            watches_[(~c[1]).x].push_back(w);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = w;
        if (value(first) == LBool::False) {
          confl = cr;
          qhead_ = trail_.size();
          while (i < end) ws[j++] = ws[i++];
        } else {
          enqueue(first, cr);
        }
      }
      ws.resize(j);
      if (confl != kNoReason) break;
    }
    return confl;
  }

  // First-UIP conflict analysis.
  void analyze(CRef confl, std::vector<Lit>& out_learnt, int& out_btlevel, std::uint32_t& out_lbd) {
    int path_count = 0;
    Lit p = lit_undef;
    out_learnt.clear();
    out_learnt.push_back(lit_undef);
    std::size_t index = trail_.size();
    do {
      if (clearnt(confl)) bump_clause(confl);
      const Lit* c = clits(confl);
      const std::uint32_t sz = csize(confl);
      for (std::uint32_t k = (p == lit_undef ? 0 : 1); k < sz; ++k) {
        const Lit q = c[k];
        const Var v = q.var();
        if (!seen_[v] && level_[v] > 0) {
          bump_var(v);
          seen_[v] = 1;
          if (level_[v] >= decision_level())
            ++path_count;
          else
            out_learnt.push_back(q);
        }
      }
      while (!seen_[trail_[--index].var()]) {
      }
      p = trail_[index];
      confl = reason_[p.var()];
      seen_[p.var()] = 0;
      --path_count;
    } while (path_count > 0);
    out_learnt[0] = ~p;

    // Recursive minimisation.
    analyze_toclear_.assign(out_learnt.begin(), out_learnt.end());
    std::uint32_t abstract_level = 0;
    for (std::size_t k = 1; k < out_learnt.size(); ++k) abstract_level |= abstract_level_of(out_learnt[k].var());
    std::size_t j = 1;
    for (std::size_t k = 1; k < out_learnt.size(); ++k) {
      const Var v = out_learnt[k].var();
      if (reason_[v] == kNoReason || !lit_redundant(out_learnt[k], abstract_level)) out_learnt[j++] = out_learnt[k];
    }
    out_learnt.resize(j);

    if (out_learnt.size() == 1) {
      out_btlevel = 0;
    } else {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < out_learnt.size(); ++k)
        if (level_[out_learnt[k].var()] > level_[out_learnt[max_i].var()]) max_i = k;
      std::swap(out_learnt[1], out_learnt[max_i]);
      out_btlevel = level_[out_learnt[1].var()];
    }
    out_lbd = compute_lbd(out_learnt);
    for (Lit l : analyze_toclear_) seen_[l.var()] = 0;
  }

  std::uint32_t abstract_level_of(Var v) const { return 1u << (level_[v] & 31); }

  bool lit_redundant(Lit p, std::uint32_t abstract_levels) {
    analyze_stack_.clear();
    analyze_stack_.push_back(p);
    const std::size_t top = analyze_toclear_.size();
    while (!analyze_stack_.empty()) {
      const CRef cr = reason_[analyze_stack_.back().var()];
      analyze_stack_.pop_back();
      const Lit* c = clits(cr);
      const std::uint32_t sz = csize(cr);
      for (std::uint32_t k = 1; k < sz; ++k) {
        const Lit q = c[k];
        const Var v = q.var();
        if (!seen_[v] && level_[v] > 0) {
          if (reason_[v] != kNoReason && (abstract_level_of(v) & abstract_levels) != 0) {
            seen_[v] = 1;
            analyze_stack_.push_back(q);
            analyze_toclear_.push_back(q);
          } else {
            for (std::size_t t = top; t < analyze_toclear_.size(); ++t) seen_[analyze_toclear_[t].var()] = 0;
            analyze_toclear_.resize(top);
            return false;
          }
        }
      }
    }
    return true;
  }

  std::uint32_t compute_lbd(const std::vector<Lit>& lits) {
    ++lbd_stamp_;
    if (lbd_seen_.size() < static_cast<std::size_t>(decision_level()) + 1) lbd_seen_.resize(decision_level() + 1, 0);
    std::uint32_t n = 0;
    for (Lit l : lits) {
      const int lv = level_[l.var()];
      if (lbd_seen_[lv] != lbd_stamp_) {
        lbd_seen_[lv] = lbd_stamp_;
        ++n;
      }
    }
    return n;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t c = trail_.size(); c-- > static_cast<std::size_t>(trail_lim_[lvl]);) {
      const Var v = trail_[c].var();
      assigns_[v] = LBool::Undef;
      reason_[v] = kNoReason;
      polarity_[v] = trail_[c].sign();
      if (heap_index_[v] < 0) heap_insert(v);
    }
    trail_.resize(trail_lim_[lvl]);
    qhead_ = trail_.size();
    trail_lim_.resize(lvl);
  }

  Lit pick_branch() {
    if (seed_ != 0 && std::uniform_real_distribution<double>(0, 1)(rng_) < 0.01 && !heap_.empty()) {
      const Var v = heap_[std::uniform_int_distribution<std::size_t>(0, heap_.size() - 1)(rng_)];
      if (value(v) == LBool::Undef) return mk_lit(v, polarity_[v]);
    }
    while (!heap_.empty()) {
      const Var v = heap_pop();
      if (value(v) == LBool::Undef) return mk_lit(v, polarity_[v]);
    }
    return lit_undef;
  }

  // --- activities -----------------------------------------------------------
  void bump_var(Var v) {
    if ((activity_[v] += var_inc_) > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0) heap_up(heap_index_[v]);
  }

  void bump_clause(CRef c) {
    const float a = cact(c) + static_cast<float>(cla_inc_);
    set_cact(c, a);
    if (a > 1e20f) {
      for (CRef l : learnts_) set_cact(l, cact(l) * 1e-20f);
      cla_inc_ *= 1e-20;
    }
  }

  // --- binary heap keyed on activity ---------------------------------------
  bool heap_less(Var a, Var b) const { return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b); }

  void heap_insert(Var v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_index_[v]);
  }

  void heap_up(int i) {
    const Var v = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) >> 1;
      if (!heap_less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }

  void heap_down(int i) {
    const Var v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    while (2 * i + 1 < n) {
      int child = 2 * i + 1;
      if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
      if (!heap_less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_index_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }

  Var heap_pop() {
    const Var top = heap_[0];
    heap_[0] = heap_.back();
    heap_index_[heap_[0]] = 0;
    heap_.pop_back();
    heap_index_[top] = -1;
    if (!heap_.empty()) heap_down(0);
    return top;
  }

  // --- clause database -------------------------------------------------------
  void reduce_db() {
    ++stats_.reductions;
    std::sort(learnts_.begin(), learnts_.end(), [&](CRef a, CRef b) {
      const bool a_glue = clbd(a) <= 2, b_glue = clbd(b) <= 2;
      if (a_glue != b_glue) return !a_glue;
      if (clbd(a) != clbd(b)) return clbd(a) > clbd(b);
      return cact(a) < cact(b);
    });
    const std::size_t half = learnts_.size() / 2;
    std::size_t j = 0;
    for (std::size_t i = 0; i < learnts_.size(); ++i) {
      const CRef c = learnts_[i];
      if (i < half && clbd(c) > 2 && csize(c) > 2 && !locked(c)) {
        free_clause(c);
      } else {
        learnts_[j++] = c;
      }
    }
    learnts_.resize(j);
    stats_.learnts = learnts_.size();
    purge_watches();
    if (wasted_ * 5 > arena_.size()) garbage_collect();
  }

  void purge_watches() {
    for (auto& ws : watches_)
      std::erase_if(ws, [&](const Watcher& w) { return cdeleted(w.cref); });
  }

  // Compacts the arena; watchers are rebuilt and reasons forwarded.
  void garbage_collect() {
    std::vector<std::uint32_t> fresh;
    fresh.reserve(arena_.size() - wasted_);
    auto move = [&](CRef c) -> CRef {
      const CRef nc = static_cast<CRef>(fresh.size());
      fresh.insert(fresh.end(), arena_.begin() + c, arena_.begin() + c + kHeader + csize(c));
      return nc;
    };
    std::vector<std::pair<CRef, CRef>> forward;
    for (auto* list : {&clauses_, &learnts_})
      for (auto& c : *list) {
        const CRef nc = move(c);
        forward.emplace_back(c, nc);
        c = nc;
      }
    std::sort(forward.begin(), forward.end());
    auto lookup = [&](CRef old) {
      auto it = std::lower_bound(forward.begin(), forward.end(), std::make_pair(old, CRef{0}));
      return it->second;
    };
    for (Lit l : trail_) {
      CRef& r = reason_[l.var()];
      if (r != kNoReason) {
        if (cdeleted(r))
          r = kNoReason;
        else
          r = lookup(r);
      }
    }
    arena_.swap(fresh);
    wasted_ = 0;
    for (auto& ws : watches_) ws.clear();
    for (CRef c : clauses_) attach(c);
    for (CRef c : learnts_) attach(c);
  }

  // Removes satisfied clauses at level 0.
  void simplify() {
    if (decision_level() != 0 || trail_.size() == simp_trail_) return;
    auto satisfied = [&](CRef c) {
      const Lit* l = clits(c);
      for (std::uint32_t k = 0; k < csize(c); ++k)
        if (value(l[k]) == LBool::True) return true;
      return false;
    };
    for (auto* list : {&clauses_, &learnts_}) {
      std::size_t j = 0;
      for (CRef c : *list) {
        if (satisfied(c) && !locked(c))
          free_clause(c);
        else
          (*list)[j++] = c;
      }
      list->resize(j);
    }
    stats_.clauses = clauses_.size();
    stats_.learnts = learnts_.size();
    purge_watches();
    if (wasted_ * 5 > arena_.size()) garbage_collect();
    simp_trail_ = trail_.size();
  }

  bool out_of_budget() {
    if (limits_.conflicts && stats_.conflicts - conflicts_at_start_ >= *limits_.conflicts) return true;
    if (limits_.cancel && limits_.cancel->load(std::memory_order_relaxed)) return true;
    if (limits_.memory_bytes && arena_.size() * sizeof(std::uint32_t) > *limits_.memory_bytes) return true;
    if (limits_.deadline && std::chrono::steady_clock::now() >= *limits_.deadline) return true;
    return false;
  }

  Result search(std::uint64_t nof_conflicts) {
    std::uint64_t conflicts_here = 0;
    std::vector<Lit> learnt;
    for (;;) {
      const CRef confl = propagate();
      if (confl != kNoReason) {
        ++stats_.conflicts;
        ++conflicts_here;
        if (decision_level() == 0) return Result::unsat;
        int bt = 0;
        std::uint32_t lbd = 0;
        analyze(confl, learnt, bt, lbd);
        cancel_until(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const CRef cr = alloc_clause(learnt, true, lbd);
          learnts_.push_back(cr);
          attach(cr);
          bump_clause(cr);
          enqueue(learnt[0], cr);
        }
        ++stats_.learned;
        stats_.learnts = learnts_.size();
        var_inc_ /= kVarDecay;
        cla_inc_ /= kClauseDecay;
        if (progress_ && stats_.conflicts % progress_every_ == 0) progress_(stats());
        if ((stats_.conflicts & 63) == 0 && out_of_budget()) {
          cancel_until(0);
          return Result::unknown;
        }
      } else {
        if (conflicts_here >= nof_conflicts) {
          cancel_until(0);
          return Result::unknown;
        }
        if (decision_level() == 0) simplify();
        if (static_cast<double>(learnts_.size()) - static_cast<double>(trail_.size()) >= max_learnts_) {
          reduce_db();
          max_learnts_ *= 1.1;
        }
        if ((stats_.decisions & 1023) == 0 && out_of_budget()) {
          cancel_until(0);
          return Result::unknown;
        }
        const Lit next = pick_branch();
        if (next == lit_undef) return Result::sat;
        ++stats_.decisions;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(next, kNoReason);
      }
    }
  }

  static double luby(double y, int x) {
    int size = 1, seq = 0;
    for (; size < x + 1; ++seq, size = 2 * size + 1) {
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return std::pow(y, seq);
  }

  bool ok_ = true;
  std::uint64_t seed_ = 0;
  std::mt19937_64 rng_;
  std::vector<std::uint32_t> arena_;
  std::size_t wasted_ = 0;
  std::vector<CRef> clauses_, learnts_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<LBool> assigns_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<char> seen_;
  std::vector<char> polarity_;
  std::vector<double> activity_;
  std::vector<Var> heap_;
  std::vector<int> heap_index_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::size_t simp_trail_ = static_cast<std::size_t>(-1);
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  double max_learnts_ = 0;
  std::vector<Lit> tmp_, analyze_stack_, analyze_toclear_;
  std::vector<std::uint64_t> lbd_seen_;
  std::uint64_t lbd_stamp_ = 0;
  std::vector<LBool> model_;
  Limits limits_;
  std::uint64_t conflicts_at_start_ = 0;
  mutable Stats stats_;
  std::function<void(const Stats&)> progress_;
  std::uint64_t progress_every_ = 1;
};

}  // namespace boxkit::sat

#endif  // BOXKIT_SAT_HPP

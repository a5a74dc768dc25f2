#ifndef BOXKIT_SOLVER_HPP
#define BOXKIT_SOLVER_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "boxkit/brute.hpp"
#include "boxkit/constraints.hpp"
#include "boxkit/encoding.hpp"
#include "boxkit/error.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/sat.hpp"

namespace boxkit {

enum class Engine { endpoint, before_cegar, brute };

inline std::string to_string(Engine e) {
  switch (e) {
    case Engine::endpoint: return "endpoint";
    case Engine::before_cegar: return "before-cegar";
    case Engine::brute: return "brute";
  }
  return "?";
}

inline Engine parse_engine(const std::string& s) {
  if (s == "endpoint") return Engine::endpoint;
  if (s == "before-cegar" || s == "before") return Engine::before_cegar;
  if (s == "brute") return Engine::brute;
  throw Error(ErrorCode::invalid_argument, "unknown engine '" + s + "'");
}

/// Resource limits for one query. Unset fields are unlimited.
struct Budget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> conflicts;
  std::optional<std::size_t> memory_mb;
  const std::atomic<bool>* cancel = nullptr;

  void validate() const {
    if (seconds && !(*seconds > 0)) throw Error(ErrorCode::invalid_argument, "time budget must be positive");
    if (conflicts && *conflicts == 0) throw Error(ErrorCode::invalid_argument, "conflict budget must be positive");
    if (memory_mb && *memory_mb == 0) throw Error(ErrorCode::invalid_argument, "memory budget must be positive");
  }
};

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t learned = 0;
  std::uint64_t restarts = 0;
  std::uint64_t refinements = 0;     // CEGAR rounds that added axioms
  std::uint64_t axioms_added = 0;    // interval-order axioms added lazily
  std::uint64_t variables = 0;
  std::uint64_t clauses = 0;         // clauses in the initial encoding
  double seconds = 0;

  void absorb(const sat::Stats& s) {
    decisions = s.decisions;
    conflicts = s.conflicts;
    propagations = s.propagations;
    learned = s.learned;
    restarts = s.restarts;
  }
};

enum class Status { feasible, infeasible, budget_exhausted };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::feasible: return "feasible";
    case Status::infeasible: return "infeasible";
    case Status::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

struct SolveOutcome {
  Status status = Status::budget_exhausted;
  std::optional<BoxRepresentation> rep;  // set iff feasible
  SolveStats stats;

  bool feasible() const noexcept { return status == Status::feasible; }
  bool infeasible() const noexcept { return status == Status::infeasible; }
  bool decided() const noexcept { return status != Status::budget_exhausted; }
};

struct SolveOptions {
  Engine engine = Engine::endpoint;
  Budget budget;
  std::uint64_t seed = 0;
  EndpointOptions endpoint;
  /// Progress hook, called every `progress_every` conflicts.
  std::function<void(const SolveStats&)> progress;
  std::uint64_t progress_every = 10000;
  /// Cap on interval-order axioms added per refinement round.
  std::size_t axioms_per_round = 200000;
};

/// Re-checks a representation geometrically: adjacency and every side
/// constraint. Throws verification_failed with the offending item.
inline void certify(const Graph& g, const BoxRepresentation& rep, const std::vector<SideConstraint>& cons) {
  const auto verdict = verify_representation(g, rep);
  if (!verdict.ok()) throw Error(ErrorCode::verification_failed, verdict.describe());
  for (const auto& sc : cons)
    if (!satisfies(rep, sc)) throw Error(ErrorCode::verification_failed, "violates '" + to_text(sc, &g) + "'");
}

namespace detail {

inline sat::Limits make_limits(const Budget& b, std::chrono::steady_clock::time_point start,
                               std::uint64_t conflicts_used = 0) {
  sat::Limits l;
  if (b.seconds)
    l.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(*b.seconds));
  if (b.conflicts) l.conflicts = *b.conflicts > conflicts_used ? *b.conflicts - conflicts_used : 1;
  if (b.memory_mb) l.memory_bytes = *b.memory_mb * 1024 * 1024;
  l.cancel = b.cancel;
  return l;
}

inline double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline bool model_truth(const sat::Solver& s, Lit l) {
  return (s.model_value(l.var()) == sat::LBool::True) != l.sign();
}

inline void hook_progress(sat::Solver& solver, const SolveOptions& opts, SolveStats& stats,
                          std::chrono::steady_clock::time_point start) {
  if (!opts.progress) return;
  solver.set_progress(
      [&opts, &stats, start](const sat::Stats& s) {
        SolveStats snap = stats;
        snap.absorb(s);
        snap.seconds = elapsed(start);
        opts.progress(snap);
      },
      opts.progress_every);
}

inline SolveOutcome solve_endpoint(const Graph& g, int d, const std::vector<SideConstraint>& cons,
                                   const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  sat::Cnf cnf;
  EndpointEncoding enc(g, d, cons, cnf, opts.endpoint);
  out.stats.variables = cnf.num_vars;
  out.stats.clauses = cnf.clauses.size();
  sat::Solver solver(opts.seed);
  solver.load(cnf);
  cnf = {};
  hook_progress(solver, opts, out.stats, start);
  const auto res = solver.solve(make_limits(opts.budget, start));
  out.stats.absorb(solver.stats());
  if (res == sat::Result::sat) {
    const auto orders = enc.decode([&](Lit l) { return model_truth(solver, l); });
    out.rep = realize(orders, g.n());
    out.status = Status::feasible;
  } else {
    out.status = res == sat::Result::unsat ? Status::infeasible : Status::budget_exhausted;
  }
  out.stats.seconds = elapsed(start);
  return out;
}

inline SolveOutcome solve_before_cegar(const Graph& g, int d, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  sat::Cnf cnf;
  BeforeEncoding enc(g, d, cnf);
  out.stats.variables = cnf.num_vars;
  out.stats.clauses = cnf.clauses.size();
  sat::Solver solver(opts.seed);
  solver.load(cnf);
  cnf = {};
  hook_progress(solver, opts, out.stats, start);
  for (;;) {
    const auto res = solver.solve(make_limits(opts.budget, start, solver.stats().conflicts));
    out.stats.absorb(solver.stats());
    if (res == sat::Result::unsat) {
      out.status = Status::infeasible;
      break;
    }
    if (res == sat::Result::unknown) {
      out.status = Status::budget_exhausted;
      break;
    }
    const auto rels = enc.decode([&](Lit l) { return model_truth(solver, l); });
    std::size_t added = 0;
    for (int i = 0; i < d; ++i) {
      for (const auto& q : two_plus_two_violations(rels[i], i, opts.axioms_per_round)) {
        auto clause = enc.axiom(q);
        if (!clause) throw Error(ErrorCode::verification_failed, "violated axiom folded to a constant");
        solver.add_clause(*clause);
        ++added;
      }
    }
    if (added == 0) {
      out.rep = realize_relations(rels, g.n());
      out.status = Status::feasible;
      break;
    }
    ++out.stats.refinements;
    out.stats.axioms_added += added;
  }
  out.stats.seconds = elapsed(start);
  return out;
}

inline SolveOutcome solve_brute(const Graph& g, int d, const std::vector<SideConstraint>& cons) {
  const auto start = std::chrono::steady_clock::now();
  if (!cons.empty()) throw Error(ErrorCode::unsupported, "brute engine does not take side constraints");
  SolveOutcome out;
  BruteForceOracle oracle(g);
  out.rep = oracle.solve(d);
  out.status = out.rep ? Status::feasible : Status::infeasible;
  out.stats.seconds = elapsed(start);
  return out;
}

}  // namespace detail

/// Does g have a d-box representation satisfying `cons`?
///
/// Infeasible is only reported after a complete refutation; running out of
/// budget yields budget_exhausted. A feasible answer carries integer boxes
/// that have been re-checked against the graph and every constraint.
inline SolveOutcome decide_box_le(const Graph& g, int d, const std::vector<SideConstraint>& cons,
                                  const SolveOptions& opts = {}) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
  opts.budget.validate();
  validate_constraints(g, d, cons);
  SolveOutcome out;
  switch (opts.engine) {
    case Engine::endpoint: out = detail::solve_endpoint(g, d, cons, opts); break;
    case Engine::before_cegar:
      if (!cons.empty())
        throw Error(ErrorCode::unsupported, "before-cegar engine cannot express side constraints");
      out = detail::solve_before_cegar(g, d, opts);
      break;
    case Engine::brute: out = detail::solve_brute(g, d, cons); break;
  }
  if (out.rep) certify(g, *out.rep, cons);
  return out;
}

/// Runs the endpoint and before-cegar engines side by side and returns the
/// first definitive answer. With `wait_both` both run to completion and
/// must agree.
struct PortfolioResult {
  SolveOutcome answer;
  Engine winner = Engine::endpoint;
  std::optional<SolveOutcome> endpoint;
  std::optional<SolveOutcome> before;
};

inline PortfolioResult decide_portfolio(const Graph& g, int d, const SolveOptions& opts, bool wait_both = false) {
  std::atomic<bool> stop{false};
  std::atomic<int> first{-1};
  PortfolioResult res;
  auto run = [&](Engine e, std::optional<SolveOutcome>& slot, int id) {
    SolveOptions o = opts;
    o.engine = e;
    o.progress = nullptr;
    if (!wait_both) o.budget.cancel = &stop;
    slot = decide_box_le(g, d, {}, o);
    if (slot->decided()) {
      int expected = -1;
      if (first.compare_exchange_strong(expected, id) && !wait_both) stop = true;
    }
  };
  std::thread t1([&] { run(Engine::endpoint, res.endpoint, 0); });
  std::thread t2([&] { run(Engine::before_cegar, res.before, 1); });
  t1.join();
  t2.join();
  if (res.endpoint->decided() && res.before->decided() &&
      res.endpoint->feasible() != res.before->feasible())
    throw Error(ErrorCode::verification_failed, "engines disagree on feasibility");
  const int w = first.load();
  res.winner = w == 1 ? Engine::before_cegar : Engine::endpoint;
  res.answer = w == 1 ? *res.before : *res.endpoint;
  return res;
}

struct BoxicityResult {
  enum class Kind { exact, exceeds, budget_exhausted };
  Kind kind = Kind::budget_exhausted;
  int value = -1;  // boxicity when exact; d_max when exceeds; undecided d otherwise
  std::optional<BoxRepresentation> rep;
  std::vector<SolveOutcome> steps;
};

/// Smallest d in [0, d_max] with a d-box representation. Complete graphs
/// have boxicity 0 by convention.
inline BoxicityResult compute_boxicity(const Graph& g, int d_max, const SolveOptions& opts = {}) {
  if (d_max < 1) throw Error(ErrorCode::invalid_argument, "d_max must be >= 1");
  BoxicityResult res;
  if (is_complete(g)) {
    res.kind = BoxicityResult::Kind::exact;
    res.value = 0;
    return res;
  }
  for (int d = 1; d <= d_max; ++d) {
    auto step = decide_box_le(g, d, {}, opts);
    res.steps.push_back(step);
    if (step.feasible()) {
      res.kind = BoxicityResult::Kind::exact;
      res.value = d;
      res.rep = step.rep;
      return res;
    }
    if (!step.decided()) {
      res.kind = BoxicityResult::Kind::budget_exhausted;
      res.value = d;
      return res;
    }
  }
  res.kind = BoxicityResult::Kind::exceeds;
  res.value = d_max;
  return res;
}

// ---------------------------------------------------------------------------
// DIMACS export / model import

struct VarMapEntry {
  enum class Kind { le, before };
  Kind kind = Kind::le;
  int var = 0;  // DIMACS (1-based)
  int dim = 1;  // 1-based
  int a = 0, b = 0;  // tokens for le, vertices for before
};

/// Everything needed to decode a model of an exported CNF.
struct VarMap {
  int n = 0;
  int d = 1;
  Engine engine = Engine::endpoint;
  std::vector<Edge> edges;
  std::vector<std::string> constraints;  // text form, vertex indices
  std::vector<VarMapEntry> entries;
  int num_vars = 0;
};

struct CnfExport {
  sat::Cnf cnf;
  VarMap map;
};

inline constexpr std::size_t kDefaultClauseCap = 100'000'000;

inline CnfExport export_cnf(const Graph& g, int d, const std::vector<SideConstraint>& cons, Engine engine,
                            std::size_t clause_cap = kDefaultClauseCap) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
  validate_constraints(g, d, cons);
  CnfExport out;
  out.map.n = g.n();
  out.map.d = d;
  out.map.engine = engine;
  out.map.edges = g.edges();
  for (const auto& sc : cons) out.map.constraints.push_back(to_text(sc));
  if (engine == Engine::endpoint) {
    const std::size_t t = 2 * static_cast<std::size_t>(g.n());
    if (d * t * t * t > clause_cap)
      throw Error(ErrorCode::too_large, "endpoint encoding exceeds the clause cap");
    EndpointEncoding enc(g, d, cons, out.cnf);
    for (const auto& e : enc.var_map())
      out.map.entries.push_back({VarMapEntry::Kind::le, e.var + 1, e.dim + 1, e.e, e.f});
  } else if (engine == Engine::before_cegar) {
    if (!cons.empty()) throw Error(ErrorCode::unsupported, "before-cegar engine cannot express side constraints");
    BeforeEncoding enc(g, d, out.cnf);
    enc.add_all_axioms(out.cnf, clause_cap);
    for (const auto& e : enc.var_map())
      out.map.entries.push_back({VarMapEntry::Kind::before, e.var + 1, e.dim + 1, e.u, e.v});
  } else {
    throw Error(ErrorCode::unsupported, "the brute engine has no CNF encoding");
  }
  out.map.num_vars = out.cnf.num_vars;
  return out;
}

inline void write_dimacs(std::ostream& out, const CnfExport& x) {
  const VarMap& m = x.map;
  out << "c boxkit n " << m.n << " d " << m.d << " engine " << to_string(m.engine) << '\n';
  for (auto [u, v] : m.edges) out << "c edge " << u << ' ' << v << '\n';
  for (const auto& c : m.constraints) out << "c cons " << c << '\n';
  for (const auto& e : m.entries) {
    out << "c map " << e.var << ' ';
    if (e.kind == VarMapEntry::Kind::le)
      out << "le " << token_name(e.a) << ' ' << token_name(e.b);
    else
      out << "before " << e.a << ' ' << e.b;
    out << " dim " << e.dim << '\n';
  }
  out << "p cnf " << x.cnf.num_vars << ' ' << x.cnf.clauses.size() << '\n';
  for (const auto& c : x.cnf.clauses) {
    for (Lit l : c) out << sat::to_dimacs(l) << ' ';
    out << "0\n";
  }
}

inline std::string to_dimacs(const CnfExport& x) {
  std::ostringstream out;
  write_dimacs(out, x);
  return out.str();
}

/// Reads the variable map back from the comment lines of an exported CNF.
inline VarMap parse_varmap(std::istream& in) {
  VarMap m;
  bool header = false;
  std::string line;
  while (std::getline(in, line)) {
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "p" && toks.size() == 4) {
      long long v = 0;
      if (!detail::parse_int(toks[2], v)) throw Error(ErrorCode::malformed_header, "bad 'p cnf' line");
      m.num_vars = static_cast<int>(v);
      continue;
    }
    if (toks[0] != "c" || toks.size() < 2) continue;
    long long a = 0, b = 0, c = 0;
    if (toks[1] == "boxkit" && toks.size() == 8) {
      if (!detail::parse_int(toks[3], a) || !detail::parse_int(toks[5], b))
        throw Error(ErrorCode::malformed_header, "bad boxkit header");
      m.n = static_cast<int>(a);
      m.d = static_cast<int>(b);
      m.engine = parse_engine(toks[7]);
      header = true;
    } else if (toks[1] == "edge" && toks.size() == 4) {
      if (!detail::parse_int(toks[2], a) || !detail::parse_int(toks[3], b))
        throw Error(ErrorCode::malformed_edge, "bad edge comment");
      m.edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } else if (toks[1] == "cons") {
      const auto pos = line.find("cons");
      m.constraints.push_back(line.substr(pos + 5));
    } else if (toks[1] == "map" && toks.size() == 8) {
      VarMapEntry e;
      if (!detail::parse_int(toks[2], a) || !detail::parse_int(toks[7], c))
        throw Error(ErrorCode::malformed_header, "bad map comment: " + line);
      e.var = static_cast<int>(a);
      e.dim = static_cast<int>(c);
      if (toks[3] == "le") {
        e.kind = VarMapEntry::Kind::le;
        e.a = parse_token(toks[4]);
        e.b = parse_token(toks[5]);
      } else if (toks[3] == "before") {
        e.kind = VarMapEntry::Kind::before;
        if (!detail::parse_int(toks[4], a) || !detail::parse_int(toks[5], b))
          throw Error(ErrorCode::malformed_header, "bad map comment: " + line);
        e.a = static_cast<int>(a);
        e.b = static_cast<int>(b);
      } else {
        throw Error(ErrorCode::malformed_header, "unknown map kind in: " + line);
      }
      m.entries.push_back(e);
    }
  }
  if (!header) throw Error(ErrorCode::malformed_header, "missing 'c boxkit' header");
  return m;
}

inline VarMap parse_varmap(const std::string& text) {
  std::istringstream in(text);
  return parse_varmap(in);
}

/// DIMACS model: signed integers, optionally prefixed by 'v' lines and
/// terminated by 0; 's' and 'c' lines are skipped.
inline std::vector<int> parse_model(std::istream& in) {
  std::vector<int> out;
  std::string line;
  while (std::getline(in, line)) {
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0] == "s" || toks[0] == "c") continue;
    for (const auto& t : toks) {
      if (t == "v") continue;
      long long x = 0;
      if (!detail::parse_int(t, x)) throw Error(ErrorCode::inconsistent_model, "non-integer token '" + t + "'");
      if (x == 0) return out;
      out.push_back(static_cast<int>(x));
    }
  }
  return out;
}

inline std::vector<int> parse_model(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

inline Graph varmap_graph(const VarMap& m) { return Graph::from_edges(m.n, m.edges); }

/// Decodes an external model into boxes, then verifies them against the
/// graph and constraints recorded in the map.
inline BoxRepresentation import_model(const VarMap& m, const std::vector<int>& assignment) {
  std::map<int, bool> value;
  for (int x : assignment) {
    const int v = x > 0 ? x : -x;
    if (v > m.num_vars && m.num_vars > 0)
      throw Error(ErrorCode::inconsistent_model, "literal " + std::to_string(x) + " exceeds variable count");
    auto [it, fresh] = value.emplace(v, x > 0);
    if (!fresh && it->second != (x > 0))
      throw Error(ErrorCode::inconsistent_model, "variable " + std::to_string(v) + " assigned both ways");
  }
  auto val = [&](int var) {
    auto it = value.find(var);
    if (it == value.end())
      throw Error(ErrorCode::inconsistent_model, "variable " + std::to_string(var) + " is unassigned");
    return it->second;
  };
  const Graph g = varmap_graph(m);
  std::vector<SideConstraint> cons;
  for (const auto& c : m.constraints) cons.push_back(parse_constraint(c, g));
  BoxRepresentation rep;
  if (m.engine == Engine::endpoint) {
    const int t = 2 * m.n;
    std::vector<std::vector<char>> le(m.d, std::vector<char>(static_cast<std::size_t>(t) * t, 1));
    for (const auto& e : m.entries) {
      if (e.kind != VarMapEntry::Kind::le || e.dim < 1 || e.dim > m.d || e.a >= t || e.b >= t)
        throw Error(ErrorCode::inconsistent_model, "map entry does not fit the instance");
      le[e.dim - 1][static_cast<std::size_t>(e.a) * t + e.b] = val(e.var);
    }
    std::vector<EndpointOrder> orders;
    for (int i = 0; i < m.d; ++i) {
      auto at = [&](int e, int f) { return le[i][static_cast<std::size_t>(e) * t + f] != 0; };
      for (int e = 0; e < t; ++e)
        for (int f = 0; f < t; ++f) {
          if (!at(e, f) && !at(f, e))
            throw Error(ErrorCode::inconsistent_model, "dim " + std::to_string(i + 1) + ": " + token_name(e) +
                                                           " and " + token_name(f) + " are incomparable");
          for (int h = 0; h < t; ++h)
            if (at(e, f) && at(f, h) && !at(e, h))
              throw Error(ErrorCode::inconsistent_model, "dim " + std::to_string(i + 1) + ": order not transitive at " +
                                                             token_name(e) + " " + token_name(f) + " " + token_name(h));
        }
      EndpointOrder o;
      o.rank.assign(t, 0);
      for (int e = 0; e < t; ++e)
        for (int f = 0; f < t; ++f)
          if (at(f, e) && !at(e, f)) ++o.rank[e];
      orders.push_back(std::move(o));
    }
    try {
      rep = realize(orders, m.n);
    } catch (const Error& err) {
      throw Error(ErrorCode::inconsistent_model, err.what());
    }
  } else if (m.engine == Engine::before_cegar) {
    std::vector<Relation> rels(m.d, Relation(m.n));
    for (const auto& e : m.entries) {
      if (e.kind != VarMapEntry::Kind::before || e.dim < 1 || e.dim > m.d || e.a >= m.n || e.b >= m.n)
        throw Error(ErrorCode::inconsistent_model, "map entry does not fit the instance");
      if (val(e.var)) rels[e.dim - 1].set(e.a, e.b);
    }
    try {
      rep = realize_relations(rels, m.n);
    } catch (const Error& err) {
      throw Error(ErrorCode::inconsistent_model, err.what());
    }
  } else {
    throw Error(ErrorCode::unsupported, "no CNF encoding for this engine");
  }
  certify(g, rep, cons);
  return rep;
}

}  // namespace boxkit

#endif  // BOXKIT_SOLVER_HPP

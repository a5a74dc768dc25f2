#ifndef BOXKIT_CLI_HPP
#define BOXKIT_CLI_HPP

// Command-line front end. `run` is stream-based so tests can drive it
// in-process; tools/boxkit.cpp only forwards argv and the std streams.
//
// Exit codes: 0 success / feasible / verified, 1 answered "no" (infeasible,
// refuted, boxicity above --max-d), 2 usage or input error, 3 budget
// exhausted.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxkit/constraints.hpp"
#include "boxkit/error.hpp"
#include "boxkit/gadgets.hpp"
#include "boxkit/geometry.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/render.hpp"
#include "boxkit/solver.hpp"
#include "boxkit/verify.hpp"

namespace boxkit::cli {

enum Exit : int { ok = 0, answered_no = 1, usage = 2, budget = 3 };

inline constexpr std::uint64_t kDefaultSeed = 0;

using json = nlohmann::ordered_json;

namespace detail {

inline std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  return read_all(f);
}

inline void write_with(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot write '" + path + "'");
  body(f);
}

inline void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  write_with(path, out, [&](std::ostream& o) { o << text; });
}

inline std::uint64_t default_seed() {
  if (const char* s = std::getenv("BOXKIT_SEED")) {
    long long v = 0;
    if (!boxkit::detail::parse_int(s, v) || v < 0)
      throw Error(ErrorCode::invalid_argument, "BOXKIT_SEED must be a non-negative integer");
    return static_cast<std::uint64_t>(v);
  }
  return kDefaultSeed;
}

inline json stats_json(const SolveStats& s) {
  return json{{"decisions", s.decisions},       {"conflicts", s.conflicts},   {"propagations", s.propagations},
              {"learned", s.learned},           {"restarts", s.restarts},     {"refinements", s.refinements},
              {"axioms_added", s.axioms_added}, {"variables", s.variables},   {"clauses", s.clauses},
              {"seconds", s.seconds}};
}

inline std::string stats_line(const SolveStats& s) {
  std::ostringstream os;
  os << "conflicts=" << s.conflicts << " decisions=" << s.decisions << " refinements=" << s.refinements
     << " axioms=" << s.axioms_added << " t=" << s.seconds << "s";
  return os.str();
}

inline json verdict_json(const Verdict& v, const std::string& key) {
  json queries = json::array();
  std::uint64_t conflicts = 0, decisions = 0;
  for (const auto& q : v.queries) {
    queries.push_back(json{{"description", q.description},
                           {"graph", q.graph},
                           {"d", q.d},
                           {"engine", to_string(q.engine)},
                           {"constraints", q.constraints},
                           {"outcome", to_string(q.status)},
                           {"stats", stats_json(q.stats)}});
    conflicts += q.stats.conflicts;
    decisions += q.stats.decisions;
  }
  json j{{key, v.subject},
         {"verdict", to_string(v.kind)},
         {"queries", queries},
         {"stats", {{"seconds", v.seconds}, {"samples", v.samples}, {"conflicts", conflicts}, {"decisions", decisions}}}};
  if (v.counterexample) j["counterexample"] = serialize_representation(*v.counterexample);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline std::string verdict_line(const Verdict& v) {
  std::ostringstream os;
  std::uint64_t conflicts = 0;
  for (const auto& q : v.queries) conflicts += q.stats.conflicts;
  os << v.subject << ": " << to_string(v.kind);
  if (!v.queries.empty())
    os << " (" << v.queries.size() << (v.queries.size() == 1 ? " query, " : " queries, ") << conflicts << " conflicts, ";
  else
    os << " (" << v.samples << " samples, ";
  os << v.seconds << " s)";
  if (!v.note.empty()) os << " " << v.note;
  return os.str();
}

inline int verdict_exit(VerdictKind k) {
  switch (k) {
    case VerdictKind::verified: return Exit::ok;
    case VerdictKind::refuted: return Exit::answered_no;
    case VerdictKind::undecided: return Exit::budget;
  }
  return Exit::usage;
}

inline Budget make_budget(const std::optional<double>& seconds, const std::optional<std::uint64_t>& conflicts) {
  Budget b;
  b.seconds = seconds;
  b.conflicts = conflicts;
  b.validate();
  return b;
}

inline void add_budget_flags(CLI::App* c, std::optional<double>& seconds, std::optional<std::uint64_t>& conflicts) {
  c->add_option("--budget", seconds, "time budget in seconds");
  c->add_option("--conflicts", conflicts, "conflict budget");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"boxkit: box representations and boxicity checks", "boxkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  std::uint64_t seed = 0;
  bool json_out = false;
  std::optional<double> budget_s;
  std::optional<std::uint64_t> budget_c;
  std::string engine_name = "endpoint";
  std::string graph_path = "-";
  std::string out_path;
  int k = 5;

  // gadget
  auto* gadget = app.add_subcommand("gadget", "print a gadget graph with labels");
  std::string gadget_name;
  gadget->add_option("name", gadget_name, "L1 | L2 | L3 | L4 | G")->required();
  gadget->add_option("--k", k, "fan width")->check(CLI::PositiveNumber);
  gadget->add_option("-o,--output", out_path, "output file");

  // boxicity
  auto* boxicity = app.add_subcommand("boxicity", "compute boxicity up to --max-d");
  int max_d = 3;
  std::string rep_out;
  boxicity->add_option("--graph", graph_path, "graph file (default stdin)");
  boxicity->add_option("--max-d", max_d, "largest dimension tried")->check(CLI::PositiveNumber);
  boxicity->add_option("--engine", engine_name, "endpoint | before-cegar | brute | portfolio");
  detail::add_budget_flags(boxicity, budget_s, budget_c);
  boxicity->add_option("--seed", seed, "branching seed");
  boxicity->add_flag("--json", json_out, "JSON output");
  boxicity->add_option("--rep-out", rep_out, "write the representation here");

  // verify-lemma
  auto* vlemma = app.add_subcommand("verify-lemma", "check one lemma, or all of them");
  std::string lemma_name;
  int jobs = 1;
  bool symmetry = false;
  std::optional<std::uint64_t> samples;
  vlemma->add_option("id", lemma_name, "pendant | helly | difference | projection | corner | cross | main | all")
      ->required();
  detail::add_budget_flags(vlemma, budget_s, budget_c);
  vlemma->add_option("--engine", engine_name, "engine for solver-backed lemmas");
  vlemma->add_option("--seed", seed, "branching and sampling seed");
  vlemma->add_option("--k", k, "fan width for cross and main")->check(CLI::PositiveNumber);
  vlemma->add_option("--samples", samples, "cases for helly and projection");
  vlemma->add_option("--jobs", jobs, "parallel checks for 'all'")->check(CLI::PositiveNumber);
  vlemma->add_flag("--symmetry", symmetry, "order the fan vertices by left end");
  vlemma->add_flag("--json", json_out, "JSON output");

  // verify-theorem
  auto* vtheorem = app.add_subcommand("verify-theorem", "check the gadget decomposition and refute box(G) <= 2");
  bool decompose_only = false;
  std::uint64_t checkpoint_every = 0;
  detail::add_budget_flags(vtheorem, budget_s, budget_c);
  vtheorem->add_option("--engine", engine_name, "engine for the full refutation");
  vtheorem->add_option("--seed", seed, "branching seed");
  vtheorem->add_option("--k", k, "fan width")->check(CLI::PositiveNumber);
  vtheorem->add_flag("--decompose-only", decompose_only, "skip the full refutation");
  vtheorem->add_option("--checkpoint-every", checkpoint_every, "print statistics every N conflicts");
  vtheorem->add_flag("--json", json_out, "JSON output");

  // export-cnf
  auto* exportc = app.add_subcommand("export-cnf", "write the encoding as DIMACS CNF");
  int d = 2;
  std::vector<std::string> constraint_texts;
  std::size_t clause_cap = kDefaultClauseCap;
  exportc->add_option("--graph", graph_path, "graph file (default stdin)");
  exportc->add_option("--d", d, "dimension")->check(CLI::PositiveNumber);
  exportc->add_option("--engine", engine_name, "endpoint | before-cegar");
  exportc->add_option("--constraint", constraint_texts, "side constraint, e.g. 'require-crossing a b'");
  exportc->add_option("--clause-cap", clause_cap, "refuse encodings larger than this");
  exportc->add_option("-o,--output", out_path, "output file");

  // import-model
  auto* importm = app.add_subcommand("import-model", "decode and verify a model of an exported CNF");
  std::string cnf_path, model_path;
  importm->add_option("--cnf", cnf_path, "exported CNF")->required();
  importm->add_option("--model", model_path, "solver model")->required();
  importm->add_option("-o,--output", out_path, "output file");
  importm->add_flag("--json", json_out, "JSON output");

  // recognize
  auto* recognize = app.add_subcommand("recognize", "report graph class memberships");
  recognize->add_option("--graph", graph_path, "graph file (default stdin)");
  recognize->add_option("--budget", budget_s, "time budget for the interval test");
  recognize->add_flag("--json", json_out, "JSON output");

  // render
  auto* render = app.add_subcommand("render", "draw a representation as SVG");
  std::string rep_path;
  int unit = 40;
  render->add_option("--graph", graph_path, "graph file")->required();
  render->add_option("--rep", rep_path, "representation file")->required();
  render->add_option("--unit", unit, "pixels per coordinate step")->check(CLI::PositiveNumber);
  render->add_option("-o,--output", out_path, "output file");

  bool seed_given = false;
  try {
    std::vector<const char*> argv{"boxkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (auto* sub : {boxicity, vlemma, vtheorem})
      if (sub->parsed() && sub->count("--seed")) seed_given = true;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return Exit::usage;
  }

  try {
    if (!seed_given) seed = detail::default_seed();

    if (gadget->parsed()) {
      const Graph g = build_gadget({parse_gadget_name(gadget_name), k});
      detail::write_file(out_path, serialize_graph(g), out);
      return Exit::ok;
    }

    if (boxicity->parsed()) {
      const Graph g = parse_graph(detail::read_file(graph_path, in));
      SolveOptions so;
      so.seed = seed;
      so.budget = detail::make_budget(budget_s, budget_c);
      const bool portfolio = engine_name == "portfolio";
      if (!portfolio) so.engine = parse_engine(engine_name);
      BoxicityResult res;
      if (!portfolio) {
        res = compute_boxicity(g, max_d, so);
      } else if (is_complete(g)) {
        res.kind = BoxicityResult::Kind::exact;
        res.value = 0;
      } else {
        res.kind = BoxicityResult::Kind::exceeds;
        res.value = max_d;
        for (int dd = 1; dd <= max_d; ++dd) {
          auto step = decide_portfolio(g, dd, so).answer;
          res.steps.push_back(step);
          if (step.feasible() || !step.decided()) {
            res.kind = step.feasible() ? BoxicityResult::Kind::exact : BoxicityResult::Kind::budget_exhausted;
            res.value = dd;
            res.rep = step.rep;
            break;
          }
        }
      }
      if (res.rep && !rep_out.empty()) detail::write_file(rep_out, serialize_representation(*res.rep), out);
      const char* status = res.kind == BoxicityResult::Kind::exact     ? "exact"
                           : res.kind == BoxicityResult::Kind::exceeds ? "exceeds"
                                                                       : "budget_exhausted";
      if (json_out) {
        json steps = json::array();
        for (std::size_t i = 0; i < res.steps.size(); ++i)
          steps.push_back(json{{"d", i + 1}, {"outcome", to_string(res.steps[i].status)},
                               {"stats", detail::stats_json(res.steps[i].stats)}});
        json j{{"status", status},
               {"boxicity", res.kind == BoxicityResult::Kind::exact ? json(res.value) : json(nullptr)},
               {"max_d", max_d},
               {"engine", engine_name},
               {"steps", steps},
               {"representation", res.rep ? json(serialize_representation(*res.rep)) : json(nullptr)}};
        out << j.dump(2) << '\n';
      } else if (res.kind == BoxicityResult::Kind::exact) {
        out << res.value << '\n';
      } else if (res.kind == BoxicityResult::Kind::exceeds) {
        out << "> " << max_d << '\n';
      } else {
        out << "undecided at d = " << res.value << '\n';
      }
      if (res.kind == BoxicityResult::Kind::exact) return Exit::ok;
      return res.kind == BoxicityResult::Kind::exceeds ? Exit::answered_no : Exit::budget;
    }

    if (vlemma->parsed()) {
      LemmaOptions lo;
      lo.budget = detail::make_budget(budget_s, budget_c);
      lo.engine = parse_engine(engine_name);
      lo.seed = seed;
      lo.k = k;
      lo.symmetry_breaking = symmetry;
      if (samples) lo.samples = *samples;
      std::vector<LemmaId> ids;
      if (lemma_name == "all")
        ids = all_lemmas();
      else
        ids.push_back(parse_lemma(lemma_name));

      std::vector<std::optional<Verdict>> results(ids.size());
      std::vector<std::exception_ptr> failures(ids.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < ids.size();) {
          try {
            results[i] = check_lemma(ids[i], lo);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      };
      std::vector<std::thread> pool;
      for (int t = 1; t < std::min<int>(jobs, static_cast<int>(ids.size())); ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();
      for (auto& f : failures)
        if (f) std::rethrow_exception(f);

      int code = Exit::ok;
      json reports = json::array();
      for (const auto& v : results) {
        const int c = detail::verdict_exit(v->kind);
        if (c == Exit::answered_no || (c == Exit::budget && code == Exit::ok)) code = c;
        if (json_out)
          reports.push_back(detail::verdict_json(*v, "lemma"));
        else
          out << detail::verdict_line(*v) << '\n';
      }
      if (json_out) out << (ids.size() == 1 ? reports[0] : reports).dump(2) << '\n';
      return code;
    }

    if (vtheorem->parsed()) {
      const DecompositionReport dec = check_theorem_decomposition(k);
      std::optional<Verdict> full;
      if (!decompose_only) {
        TheoremOptions to;
        to.k = k;
        to.seed = seed;
        to.budget = detail::make_budget(budget_s, budget_c);
        to.engine = engine_name == "endpoint" && !vtheorem->count("--engine") ? Engine::before_cegar
                                                                              : parse_engine(engine_name);
        if (checkpoint_every > 0) {
          to.checkpoint_every = checkpoint_every;
          to.checkpoint = [&err](const SolveStats& s) { err << "checkpoint " << detail::stats_line(s) << std::endl; };
        }
        full = check_theorem_full(to);
      }
      if (json_out) {
        json emb = json::array();
        for (const auto& e : dec.entries) {
          json x{{"description", e.description}, {"ok", e.ok}};
          if (!e.ok) x["why"] = e.why;
          emb.push_back(x);
        }
        json j{{"decomposition", {{"k", dec.k}, {"n", dec.n}, {"m", dec.m}, {"embeddings", emb}, {"ok", dec.all_ok()}}}};
        j["theorem"] = full ? detail::verdict_json(*full, "subject") : json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << "G(k=" << dec.k << "): " << dec.n << " vertices, " << dec.m << " edges\n";
        for (const auto& e : dec.entries)
          out << "  " << e.description << ": " << (e.ok ? "ok" : "FAILED " + e.why) << '\n';
        if (full) out << detail::verdict_line(*full) << '\n';
      }
      if (!dec.all_ok()) return Exit::answered_no;
      return full ? detail::verdict_exit(full->kind) : Exit::ok;
    }

    if (exportc->parsed()) {
      const Graph g = parse_graph(detail::read_file(graph_path, in));
      std::vector<SideConstraint> cons;
      for (const auto& t : constraint_texts) cons.push_back(parse_constraint(t, g));
      const Engine e = parse_engine(engine_name);
      const CnfExport x = export_cnf(g, d, cons, e, clause_cap);
      detail::write_with(out_path, out, [&](std::ostream& o) { write_dimacs(o, x); });
      return Exit::ok;
    }

    if (importm->parsed()) {
      const std::string cnf_text = detail::read_file(cnf_path, in);
      const std::string model_text = detail::read_file(model_path, in);
      if (model_text.find("UNSAT") != std::string::npos) {
        out << (json_out ? "{\n  \"status\": \"infeasible\"\n}\n" : "infeasible\n");
        return Exit::answered_no;
      }
      const VarMap map = parse_varmap(cnf_text);
      const BoxRepresentation rep = import_model(map, parse_model(model_text));
      if (json_out) {
        json j{{"status", "feasible"}, {"n", map.n}, {"d", map.d}, {"representation", serialize_representation(rep)}};
        detail::write_file(out_path, j.dump(2) + "\n", out);
      } else {
        detail::write_file(out_path, serialize_representation(rep), out);
      }
      return Exit::ok;
    }

    if (recognize->parsed()) {
      const Graph g = parse_graph(detail::read_file(graph_path, in));
      const bool sp = is_series_parallel(g), tt = is_2_tree(g);
      const bool maximal = static_cast<long long>(g.m()) == 2LL * g.n() - 3;
      std::string interval = "undecided";
      if (is_complete(g)) {
        interval = "yes";
      } else {
        SolveOptions so;
        so.seed = seed;
        so.engine = g.n() <= 64 ? Engine::endpoint : Engine::before_cegar;
        so.budget.seconds = budget_s.value_or(10.0);
        so.budget.validate();
        const auto r = decide_box_le(g, 1, {}, so);
        if (r.decided()) interval = r.feasible() ? "yes" : "no";
      }
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      if (json_out) {
        json j{{"n", g.n()},          {"m", g.m()},
               {"series_parallel", sp}, {"two_tree", tt},
               {"edge_maximal", maximal}, {"interval", interval}};
        out << j.dump(2) << '\n';
      } else {
        out << "vertices: " << g.n() << '\n'
            << "edges: " << g.m() << '\n'
            << "series-parallel: " << yn(sp) << '\n'
            << "2-tree: " << yn(tt) << '\n'
            << "m = 2n-3: " << yn(maximal) << '\n'
            << "interval: " << interval << '\n';
      }
      return Exit::ok;
    }

    if (render->parsed()) {
      const Graph g = parse_graph(detail::read_file(graph_path, in));
      const BoxRepresentation rep = parse_representation(detail::read_file(rep_path, in));
      RenderOptions ro;
      ro.unit = unit;
      detail::write_file(out_path, render_svg(g, rep, ro), out);
      return Exit::ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return Exit::usage;
  }
  return Exit::usage;
}

}  // namespace boxkit::cli

#endif  // BOXKIT_CLI_HPP

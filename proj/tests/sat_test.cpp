#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <random>

#include "boxkit/sat.hpp"

using namespace boxkit::sat;

namespace {

Cnf random_3cnf(std::mt19937_64& rng, int vars, int clauses) {
  Cnf cnf;
  cnf.num_vars = vars;
  std::uniform_int_distribution<int> var(0, vars - 1);
  for (int c = 0; c < clauses; ++c) {
    std::vector<Lit> cl;
    for (int j = 0; j < 3; ++j) cl.push_back(mk_lit(var(rng), rng() & 1));
    cnf.add(cl);
  }
  return cnf;
}

bool satisfied(const Cnf& cnf, const std::function<bool(Lit)>& truth) {
  for (const auto& c : cnf.clauses) {
    bool any = false;
    for (Lit l : c) any = any || truth(l);
    if (!any) return false;
  }
  return true;
}

bool truth_table_sat(const Cnf& cnf) {
  for (std::uint32_t a = 0; a < (1u << cnf.num_vars); ++a)
    if (satisfied(cnf, [&](Lit l) { return (((a >> l.var()) & 1) != 0) != l.sign(); })) return true;
  return false;
}

/// Pigeonhole: p pigeons, h holes.
Cnf pigeonhole(int p, int h) {
  Cnf cnf;
  cnf.num_vars = p * h;
  auto x = [&](int i, int j) { return mk_lit(i * h + j); };
  for (int i = 0; i < p; ++i) {
    std::vector<Lit> c;
    for (int j = 0; j < h; ++j) c.push_back(x(i, j));
    cnf.add(c);
  }
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < p; ++i)
      for (int k = i + 1; k < p; ++k) cnf.add({~x(i, j), ~x(k, j)});
  return cnf;
}

}  // namespace

TEST(Sat, LiteralEncoding) {
  EXPECT_EQ(to_dimacs(mk_lit(0)), 1);
  EXPECT_EQ(to_dimacs(mk_lit(4, true)), -5);
  EXPECT_EQ(from_dimacs(-5), mk_lit(4, true));
  EXPECT_EQ(~~mk_lit(3), mk_lit(3));
}

TEST(Sat, AgreesWithTruthTable) {
  std::mt19937_64 rng(3);
  int sat_count = 0, unsat_count = 0;
  for (int t = 0; t < 400; ++t) {
    const int vars = 3 + static_cast<int>(rng() % 10);
    const Cnf cnf = random_3cnf(rng, vars, static_cast<int>(vars * (3.0 + (rng() % 30) / 10.0)));
    Solver s(t % 3);
    s.load(cnf);
    const Result r = s.solve();
    const bool expect = truth_table_sat(cnf);
    ASSERT_EQ(r == Result::sat, expect) << "instance " << t;
    if (r == Result::sat) {
      ++sat_count;
      ASSERT_TRUE(satisfied(cnf, [&](Lit l) { return s.model_true(l); }));
    } else {
      ++unsat_count;
    }
  }
  EXPECT_GT(sat_count, 20);
  EXPECT_GT(unsat_count, 20);
}

TEST(Sat, PlantedInstancesModelsCheck) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    // Keep only clauses satisfied by a hidden assignment.
    std::vector<bool> hidden(150);
    for (auto&& b : hidden) b = rng() & 1;
    Cnf cnf;
    cnf.num_vars = 150;
    for (const auto& c : random_3cnf(rng, 150, 1200).clauses) {
      bool ok = false;
      for (Lit l : c) ok = ok || hidden[l.var()] != l.sign();
      if (ok) cnf.add(c);
    }
    Solver s;
    s.load(cnf);
    ASSERT_EQ(s.solve(), Result::sat);
    ASSERT_TRUE(satisfied(cnf, [&](Lit l) { return s.model_true(l); }));
  }
}

TEST(Sat, PigeonholeIsUnsat) {
  for (int h = 1; h <= 6; ++h) {
    Solver s;
    s.load(pigeonhole(h + 1, h));
    EXPECT_EQ(s.solve(), Result::unsat) << h;
    Solver t;
    t.load(pigeonhole(h, h));
    EXPECT_EQ(t.solve(), Result::sat) << h;
  }
}

TEST(Sat, TrivialCases) {
  Solver empty;
  EXPECT_EQ(empty.solve(), Result::sat);
  Solver contradiction;
  contradiction.add_clause({mk_lit(0)});
  contradiction.add_clause({~mk_lit(0)});
  EXPECT_EQ(contradiction.solve(), Result::unsat);
  Solver empty_clause;
  empty_clause.add_clause(std::vector<Lit>{});
  EXPECT_EQ(empty_clause.solve(), Result::unsat);
  Solver taut;
  taut.add_clause({mk_lit(0), ~mk_lit(0)});
  EXPECT_EQ(taut.solve(), Result::sat);
}

TEST(Sat, ConflictLimitGivesUnknown) {
  Solver s;
  s.load(pigeonhole(10, 9));
  Limits l;
  l.conflicts = 10;
  EXPECT_EQ(s.solve(l), Result::unknown);
  EXPECT_GE(s.stats().conflicts, 10u);
}

TEST(Sat, CancelFlagStopsSearch) {
  Solver s;
  s.load(pigeonhole(11, 10));
  std::atomic<bool> cancel{true};
  Limits l;
  l.cancel = &cancel;
  EXPECT_EQ(s.solve(l), Result::unknown);
}

TEST(Sat, DeadlineStopsSearch) {
  Solver s;
  s.load(pigeonhole(12, 11));
  Limits l;
  l.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(50);
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(s.solve(l), Result::unknown);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(Sat, ProgressCallbackFires) {
  Solver s;
  s.load(pigeonhole(8, 7));
  int calls = 0;
  s.set_progress([&](const Stats&) { ++calls; }, 100);
  EXPECT_EQ(s.solve(), Result::unsat);
  EXPECT_GT(calls, 0);
}

TEST(Sat, SeedsAgreeOnStatus) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Cnf cnf = random_3cnf(rng, 40, 170);
    Result first = Result::unknown;
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      Solver s(seed);
      s.load(cnf);
      const Result r = s.solve();
      if (seed == 0) first = r;
      ASSERT_EQ(r, first);
    }
  }
}

TEST(Cnf, FlatClauseStorage) {
  Cnf cnf;
  cnf.add({mk_lit(0), mk_lit(1, true)});
  cnf.add({mk_lit(2)});
  const std::vector<Lit> three{mk_lit(0, true), mk_lit(1), mk_lit(2, true)};
  cnf.add(three);
  ASSERT_EQ(cnf.clauses.size(), 3u);
  EXPECT_EQ(cnf.clauses[0].size(), 2u);
  EXPECT_EQ(cnf.clauses[1][0], mk_lit(2));
  EXPECT_TRUE(std::equal(three.begin(), three.end(), cnf.clauses.back().begin()));
  std::size_t lits = 0;
  for (auto c : cnf.clauses) lits += c.size();
  EXPECT_EQ(lits, 6u);
}

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lifo/baselines.hpp"
#include "lifo/dp_lmax.hpp"
#include "lifo/oracle.hpp"

using namespace lifo;
using testutil::e4;
using testutil::identity_order;
using testutil::make_instance;

TEST_CASE("solve_lmax basics") {
  // One sequential move {1->4} already reaches the unconstrained EDD value.
  const SolveResult r = solve_lmax(e4(1));
  CHECK(r.value == 5);
  CHECK(r.schedule.order == std::vector<int>{2, 3, 4, 1});
  CHECK(r.value == edd(e4(1)).value);

  const Instance locked = e4(1).with_movable({false, false, false, false});
  CHECK(solve_lmax(locked).value == 30);
  CHECK(solve_lmax(locked).schedule.order == identity_order(4));

  const Instance one = make_instance({7}, {1}, {5}, 1);
  CHECK(solve_lmax(one).value == 2);
}

TEST_CASE("lmax table invariants") {
  std::mt19937 rng(919);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Instance ins = testutil::random_instance(rng, n, 3);
    const LmaxTables t = build_lmax_tables(ins);
    for (int i = 1; i <= n; ++i) {
      // Level 0: plain initial order of the window.
      for (int j = i; j <= n; ++j) {
        i64 worst = ins.lateness0(i);
        for (int k = i + 1; k <= j; ++k) worst = std::max(worst, ins.lateness0(k));
        CHECK(t.best_lmax(i, j, 0) == worst);
      }
      for (int level = 1; level <= t.max_level(); ++level) {
        CHECK(t.move_option(i, i, level) == ins.lateness0(i));
        for (int j = i; j <= n; ++j) {
          CHECK(t.best_lmax(i, j, level) <= t.best_lmax(i, j, level - 1));
          if (t.move_option(i, j, level) != kForbidden)
            CHECK(t.best_lmax(i, j, level) <= t.move_option(i, j, level));
        }
      }
    }
  }
}

TEST_CASE("agrees with the oracle") {
  std::mt19937 rng(1020);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int s = 1 + static_cast<int>(rng() % 3);
    Instance ins = testutil::random_instance(rng, n, s);
    if (rep % 3 == 0) ins = ins.with_movable(testutil::random_movable(rng, n));
    const SolveResult r = solve_lmax(ins);
    CHECK(r.value == oracle_optimum(ins, s, Objective::Lmax).value);

    const ApplyResult replay = apply_moves(ins, r.moves);
    CHECK(replay.schedule.order == r.schedule.order);
    CHECK(evaluate_lmax(ins, replay.schedule) == r.value);
    CHECK(stack_metrics(replay.trace).max_occupancy <= s);
    for (const Move& m : r.moves.moves()) CHECK(ins.movable(m.from));
  }
}

TEST_CASE("per-level reads match fresh solves") {
  std::mt19937 rng(1121);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Instance ins = testutil::random_instance(rng, n, 4);
    const LmaxTables t = build_lmax_tables(ins);
    for (int s = 1; s <= 4; ++s) {
      const SolveResult at = lmax_solution_at(ins, t, s);
      const SolveResult fresh = solve_lmax(ins.with_stack_capacity(s));
      CHECK(at.value == fresh.value);
      CHECK(at.schedule.order == fresh.schedule.order);
    }
    CHECK_THROWS_AS(lmax_solution_at(ins, t, 5), InvalidInput);
  }
}

TEST_CASE("custom due dates, including negative ones") {
  const Instance two = make_instance({3, 4}, {1, 1}, {1, 1}, 1);
  const LmaxTables t(two, 1, {-1, -2});
  CHECK(t.best_lmax(1, 1, 0) == 4);   // 3 - (-1)
  CHECK(t.best_lmax(2, 2, 0) == 9);   // 7 - (-2)
  CHECK(t.best_lmax(1, 2, 0) == 9);
  CHECK(t.move_option(1, 2, 1) == 8);  // <2,1>: C2=4 -> 6, C1=7 -> 8
  CHECK(t.best_lmax(1, 2, 1) == 8);
}

TEST_CASE("phimax with plain lateness reduces to lmax") {
  std::mt19937 rng(1222);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int s = 1 + static_cast<int>(rng() % 3);
    const Instance ins = testutil::random_instance(rng, n, s);
    const SolveResult via_phi = solve_phimax(ins, RegularFunctionSet::lateness(ins));
    const SolveResult direct = solve_lmax(ins);
    CHECK(via_phi.value == direct.value);
    CHECK(evaluate_lmax(ins, via_phi.schedule) == direct.value);
  }
}

TEST_CASE("phimax with affine costs") {
  // Steep phi_2 = 20t vs flat phi_1 = 2t + 150: keeping sigma0 is optimal.
  const Instance two = make_instance({1, 4}, {1, 1}, {0, 0}, 1);
  const RegularFunctionSet phi =
      RegularFunctionSet::affine(two, {{2, 150}, {20, 0}});
  const SolveResult r = solve_phimax(two, phi);
  CHECK(r.value == 152);
  CHECK(r.schedule.order == std::vector<int>{1, 2});
  CHECK(r.moves.empty());

  // A long frozen leading job shifts everything; swapping 2 and 3 still pays.
  const Instance three =
      make_instance({10, 1, 4}, {1, 1, 1}, {0, 0, 0}, 2)
          .with_movable({false, true, true});
  const RegularFunctionSet phi3 =
      RegularFunctionSet::affine(three, {{0, 0}, {2, 150}, {20, 0}});
  const SolveResult r3 = solve_phimax(three, phi3);
  CHECK(r3.value == 280);
  CHECK(r3.schedule.order == std::vector<int>{1, 3, 2});
}

TEST_CASE("phimax against the oracle") {
  std::mt19937 rng(1323);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int s = 1 + static_cast<int>(rng() % 3);
    const Instance ins = testutil::random_instance(rng, n, s);
    const RegularFunctionSet phi = RegularFunctionSet::weighted_tardiness(ins);
    const SolveResult r = solve_phimax(ins, phi);
    CHECK(r.value == oracle_optimum_phimax(ins, phi, s).value);
    CHECK(evaluate_phimax(ins, phi, r.schedule) == r.value);

    // The answer lies between max_j phi_j(p_j) and the sigma0 value.
    i64 alpha = std::numeric_limits<i64>::min();
    for (int j = 1; j <= n; ++j) alpha = std::max(alpha, phi.eval(j, ins.job(j).p));
    const i64 omega =
        evaluate_phimax(ins, phi, make_schedule(ins, identity_order(n)));
    CHECK(r.value >= alpha);
    CHECK(r.value <= omega);
  }
}

TEST_CASE("non-monotone phi is rejected") {
  const Instance two = make_instance({1, 1}, {1, 1}, {1, 1}, 1);
  const RegularFunctionSet bad(
      2, {[](i64 t) { return -t; }, [](i64) { return i64{0}; }});
  CHECK_THROWS_AS(solve_phimax(two, bad), InvalidInput);
}

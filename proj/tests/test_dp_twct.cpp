#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lifo/baselines.hpp"
#include "lifo/dp_twct.hpp"
#include "lifo/oracle.hpp"

using namespace lifo;
using testutil::e4;
using testutil::identity_order;
using testutil::make_instance;

TEST_CASE("move_cost") {
  const Instance two = make_instance({2, 1}, {1, 10}, {0, 0}, 1);
  CHECK(move_cost(two, 1, 2) == 1 * 1 - 2 * 10);  // -19
  CHECK(move_cost(two, 1, 1) == 0);

  const Instance ins = e4(1);
  CHECK(move_cost(ins, 1, 2) == 1 * 10 - 25 * 1);  // -15
  CHECK(move_cost(ins, 1, 4) == 1 * 25 - 25 * 3);  // -50
  CHECK(move_cost(ins, 3, 4) == 1 * 10 - 5 * 1);   // 5

  const Instance zw = make_instance({4, 2}, {0, 3}, {0, 0}, 1);
  CHECK(move_cost(zw, 1, 2) == 0 * 2 - 4 * 3);
}

TEST_CASE("solve_twct basics") {
  const Instance two = make_instance({2, 1}, {1, 10}, {0, 0}, 1);
  const SolveResult r = solve_twct(two);
  CHECK(r.value == -19);
  CHECK(r.schedule.order == std::vector<int>{2, 1});
  CHECK(r.moves.moves() == std::vector<Move>{{1, 2}});

  // Already WSPT-ordered: nothing to gain.
  const Instance sorted = make_instance({1, 2, 4}, {4, 4, 4}, {0, 0, 0}, 2);
  CHECK(solve_twct(sorted).value == 0);
  CHECK(solve_twct(sorted).moves.empty());

  const Instance one = make_instance({7}, {3}, {5}, 1);
  CHECK(solve_twct(one).value == 0);

  // S=1 admits only sequential moves: {1->4} alone, variation -50.
  const SolveResult tight = solve_twct(e4(1));
  CHECK(tight.value == -50);
  CHECK(tight.schedule.order == std::vector<int>{2, 3, 4, 1});
  CHECK(evaluate_twct(e4(1), tight.schedule) == 100);

  // S>=2 nests {2->3} inside {1->4} for another -5.
  const SolveResult r4 = solve_twct(e4(3));
  CHECK(r4.value == -55);
  CHECK(evaluate_twct(e4(3), r4.schedule) == 95);
}

TEST_CASE("table invariants") {
  std::mt19937 rng(515);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Instance ins = testutil::random_instance(rng, n, 3);
    const TwctTables t = build_twct_tables(ins);
    for (int level = 1; level <= t.max_level(); ++level) {
      for (int i = 1; i <= n; ++i) {
        CHECK(t.move_option(i, i, level) == 0);  // identity move costs nothing
        for (int j = i; j <= n; ++j) {
          CHECK(t.variation(i, j, level) <= 0);
          if (level > 1)  // more levels never hurt
            CHECK(t.variation(i, j, level) <= t.variation(i, j, level - 1));
        }
      }
    }
    // The reported variation is exactly the sum of per-move costs.
    for (int level = 1; level <= t.max_level(); ++level) {
      const MoveSet moves = t.reconstruct(level);
      i64 sum = 0;
      for (const Move& m : moves.moves()) sum += move_cost(ins, m.from, m.to);
      CHECK(sum == t.variation(1, n, level));
      CHECK(moves.required_capacity() <= level);
    }
  }
}

TEST_CASE("agrees with the oracle") {
  std::mt19937 rng(616);
  for (int rep = 0; rep < 150; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int s = 1 + static_cast<int>(rng() % 3);
    const Instance ins = testutil::random_instance(rng, n, s);
    const SolveResult r = solve_twct(ins);
    const i64 sigma0 = evaluate_twct(ins, make_schedule(ins, identity_order(n)));
    CHECK(sigma0 + r.value == oracle_optimum(ins, s, Objective::Twct).value);

    const ApplyResult replay = apply_moves(ins, r.moves);
    CHECK(replay.schedule.order == r.schedule.order);
    CHECK(evaluate_twct(ins, replay.schedule) == sigma0 + r.value);
    CHECK(stack_metrics(replay.trace).max_occupancy <= s);
  }
}

TEST_CASE("movable restrictions") {
  const Instance two = make_instance({2, 1}, {1, 10}, {0, 0}, 1);
  CHECK(solve_twct(two.with_movable({false, true})).value == 0);
  CHECK(solve_twct(two.with_movable({false, true})).moves.empty());

  std::mt19937 rng(717);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int s = 1 + static_cast<int>(rng() % 3);
    const Instance plain = testutil::random_instance(rng, n, s);

    // All-movable flags change nothing.
    CHECK(solve_twct(plain.with_movable(std::vector<bool>(static_cast<size_t>(n), true)))
              .value == solve_twct(plain).value);

    // Nothing movable: sigma0 is the only option.
    const Instance locked =
        plain.with_movable(std::vector<bool>(static_cast<size_t>(n), false));
    CHECK(solve_twct(locked).value == 0);
    CHECK(solve_twct(locked).schedule.order == identity_order(n));

    const Instance ins = plain.with_movable(testutil::random_movable(rng, n));
    const i64 sigma0 = evaluate_twct(ins, make_schedule(ins, identity_order(n)));
    const SolveResult r = solve_twct(ins);
    CHECK(sigma0 + r.value == oracle_optimum(ins, s, Objective::Twct).value);
    for (const Move& m : r.moves.moves()) CHECK(ins.movable(m.from));
  }
}

TEST_CASE("per-level reads match fresh solves") {
  std::mt19937 rng(818);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Instance ins = testutil::random_instance(rng, n, 4);
    const TwctTables t = build_twct_tables(ins);
    for (int s = 1; s <= 4; ++s) {
      const SolveResult at = twct_solution_at(ins, t, s);
      const SolveResult fresh = solve_twct(ins.with_stack_capacity(s));
      CHECK(at.value == fresh.value);
      CHECK(at.schedule.order == fresh.schedule.order);
      CHECK(at.moves.moves() == fresh.moves.moves());
    }
    CHECK_THROWS_AS(twct_solution_at(ins, t, 5), InvalidInput);
    CHECK_THROWS_AS(twct_solution_at(ins, t, 0), InvalidInput);
  }

  // Repeated solves are bit-identical.
  const Instance ins = testutil::random_instance(rng, 7, 3);
  const SolveResult a = solve_twct(ins), b = solve_twct(ins);
  CHECK(a.value == b.value);
  CHECK(a.schedule.order == b.schedule.order);
  CHECK(a.moves.moves() == b.moves.moves());
}

#include <algorithm>
#include <cstddef>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "lifo/moves.hpp"

using namespace lifo;
using testutil::e4;
using testutil::identity_order;
using testutil::make_instance;

namespace {

Instance uniform_instance(int n, int stack) {
  return testutil::make_instance(std::vector<i64>(static_cast<size_t>(n), 1),
                                 std::vector<i64>(static_cast<size_t>(n), 1),
                                 std::vector<i64>(static_cast<size_t>(n), 0), stack);
}

// Independent move semantics: apply one move at a time, in the given order.
// A single move i->j removes job i from the current sequence and reinserts
// it right after the last job of {i+1..j} in the current sequence.  For
// compatible sets the result must not depend on the application order.
std::vector<int> apply_sequentially(int n, std::vector<Move> moves) {
  std::vector<int> seq = identity_order(n);
  for (const Move& m : moves) {
    if (m.identity()) continue;
    seq.erase(std::find(seq.begin(), seq.end(), m.from));
    size_t at = 0;
    for (size_t k = 0; k < seq.size(); ++k)
      if (seq[k] > m.from && seq[k] <= m.to) at = k + 1;
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(at), m.from);
  }
  return seq;
}

}  // namespace

TEST_CASE("move set construction") {
  // Identity moves are dropped.
  MoveSet only_identity = MoveSet::build({{2, 2}});
  CHECK(only_identity.moves().empty());
  CHECK(only_identity.required_capacity() == 0);

  CHECK_THROWS_AS(MoveSet::build({{3, 2}}), InvalidInput);          // backwards
  CHECK_THROWS_AS(MoveSet::build({{1, 2}, {1, 3}}), InvalidInput);  // duplicate source
  CHECK_THROWS_AS(MoveSet::build({{1, 3}, {2, 4}}), InvalidInput);  // crossing
  CHECK_THROWS_AS(MoveSet::build({{1, 2}, {2, 3}}), InvalidInput);  // i2 == j1 overlap

  // The three-move family: 7->9 nested in 5->9, 1->3 sequential.
  const MoveSet trio = MoveSet::build({{5, 9}, {1, 3}, {7, 9}});
  CHECK(trio.moves() == std::vector<Move>{{1, 3}, {5, 9}, {7, 9}});
  CHECK(trio.levels() == std::vector<int>{1, 2, 1});
  CHECK(trio.required_capacity() == 2);
  CHECK(trio.move_of(5) == Move{5, 9});
  CHECK(!trio.move_of(2).has_value());
}

TEST_CASE("apply_moves basics") {
  const Instance nine = uniform_instance(9, 3);
  const ApplyResult trio = apply_moves(nine, MoveSet::build({{1, 3}, {5, 9}, {7, 9}}));
  CHECK(trio.schedule.order == std::vector<int>{2, 3, 1, 4, 6, 8, 9, 7, 5});
  const StackMetrics metrics = stack_metrics(trio.trace);
  CHECK(metrics.moves_count == 3);
  CHECK(metrics.max_occupancy == 2);
  // Occupancy after positions 1..8 reads (1,1,0,0,1,1,2,2): mean 1.
  CHECK(metrics.avg_occupancy == doctest::Approx(1.0));
  CHECK(trio.trace.occupancy_after ==
        std::vector<int>{0, 1, 1, 0, 0, 1, 1, 2, 2, 0});

  const ApplyResult none = apply_moves(nine, MoveSet::build({}));
  CHECK(none.schedule.order == identity_order(9));
  CHECK(stack_metrics(none.trace).moves_count == 0);
  CHECK(stack_metrics(none.trace).max_occupancy == 0);
  CHECK(stack_metrics(none.trace).avg_occupancy == 0.0);

  const Instance three = uniform_instance(3, 2);
  CHECK(apply_moves(three, MoveSet::build({{1, 3}, {2, 3}})).schedule.order ==
        std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(apply_moves(three.with_stack_capacity(1),
                              MoveSet::build({{1, 3}, {2, 3}})),
                  CapacityExceeded);
  CHECK_THROWS_AS(apply_moves(three, MoveSet::build({{1, 5}})), InvalidInput);

  const Instance two = uniform_instance(2, 1);
  const StackMetrics m2 = stack_metrics(apply_moves(two, MoveSet::build({{1, 2}})).trace);
  CHECK(m2.moves_count == 1);
  CHECK(m2.max_occupancy == 1);
  CHECK(m2.avg_occupancy == doctest::Approx(1.0));
}

TEST_CASE("reconstruct_move_set") {
  const Instance nine = uniform_instance(9, 3);
  const auto trio = reconstruct_move_set(nine, {2, 3, 1, 4, 6, 8, 9, 7, 5});
  REQUIRE(trio.has_value());
  CHECK(trio->moves() == std::vector<Move>{{1, 3}, {5, 9}, {7, 9}});

  const auto empty = reconstruct_move_set(nine, identity_order(9));
  REQUIRE(empty.has_value());
  CHECK(empty->moves().empty());

  const Instance four = uniform_instance(4, 2);
  const auto pair = reconstruct_move_set(four, {2, 1, 4, 3});
  REQUIRE(pair.has_value());
  CHECK(pair->moves() == std::vector<Move>{{1, 2}, {3, 4}});
  CHECK(pair->levels() == std::vector<int>{1, 1});

  // 3 precedes 1 but 2 does not: no postponing move family produces this.
  CHECK(!reconstruct_move_set(uniform_instance(3, 2), {3, 1, 2}).has_value());
}

TEST_CASE("is_reachable") {
  const Instance three = uniform_instance(3, 2);
  CHECK(!is_reachable(three, {3, 2, 1}, 1));
  CHECK(is_reachable(three, {3, 2, 1}, 2));
  CHECK(is_reachable(three, identity_order(3), 1));
  CHECK(is_reachable(e4(1), {2, 1, 3, 4}, 1));
  CHECK(!is_reachable(three, {3, 1, 2}, 3));

  // Frozen jobs may not be move sources.
  const Instance frozen = three.with_movable({false, true, true});
  CHECK(!is_reachable(frozen, {2, 1, 3}, 2));
  CHECK(is_reachable(frozen, {1, 3, 2}, 2));
}

TEST_CASE("round trip over every reachable permutation, n=6") {
  const int n = 6;
  const Instance ins = uniform_instance(n, n);
  std::vector<int> order = identity_order(n);
  int reachable = 0;
  do {
    const auto moves = reconstruct_move_set(ins, order);
    if (!moves) continue;
    ++reachable;
    const ApplyResult replay = apply_moves(ins, *moves);
    CHECK(replay.schedule.order == order);
    // Metrics/levels agreement.
    CHECK(stack_metrics(replay.trace).max_occupancy == moves->required_capacity());
    CHECK(static_cast<size_t>(stack_metrics(replay.trace).moves_count) ==
          moves->moves().size());
    // Moved jobs land behind their whole window.
    std::vector<int> position(static_cast<size_t>(n) + 1);
    for (int k = 0; k < n; ++k) position[static_cast<size_t>(order[static_cast<size_t>(k)])] = k;
    for (const Move& m : moves->moves())
      for (int mid = m.from + 1; mid <= m.to; ++mid)
        CHECK(position[static_cast<size_t>(mid)] < position[static_cast<size_t>(m.from)]);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(reachable > n);  // sanity: far fewer than n! but more than trivial
}

TEST_CASE("application order never changes the outcome") {
  const int n = 7;
  const Instance ins = uniform_instance(n, n);
  std::mt19937 rng(4242);
  std::vector<int> order = identity_order(n);
  do {
    const auto moves = reconstruct_move_set(ins, order);
    if (!moves) continue;
    std::vector<Move> shuffled = moves->moves();
    CHECK(apply_sequentially(n, shuffled) == order);
    for (int round = 0; round < 3; ++round) {
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(apply_sequentially(n, shuffled) == order);
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("reachability is monotone in S") {
  const int n = 6;
  const Instance ins = uniform_instance(n, n);
  std::vector<int> order = identity_order(n);
  do {
    for (int s = 1; s + 1 <= n; ++s)
      if (is_reachable(ins, order, s)) CHECK(is_reachable(ins, order, s + 1));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("move script round trip") {
  std::istringstream in("# two moves\n1 3\n\n5 9\n");
  const std::vector<Move> parsed = parse_move_script(in);
  CHECK(parsed == std::vector<Move>{{1, 3}, {5, 9}});
  std::ostringstream out;
  write_move_script(out, MoveSet::build(parsed));
  CHECK(out.str() == "1 3\n5 9\n");

  std::istringstream bad("1\n");
  CHECK_THROWS_AS(parse_move_script(bad), InvalidInput);
  std::istringstream bad2("1 x\n");
  CHECK_THROWS_AS(parse_move_script(bad2), InvalidInput);
}

TEST_CASE("trace CSV") {
  const Instance two = uniform_instance(2, 1);
  std::ostringstream out;
  write_trace_csv(out, apply_moves(two, MoveSet::build({{1, 2}})).trace);
  CHECK(out.str() ==
        "step,occupancy,event\n"
        "1,1,push 1\n"
        "2,1,pass 2\n"
        "2,0,pop 1\n");
}

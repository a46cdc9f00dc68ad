#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "lifo/model.hpp"

using namespace lifo;
using testutil::e4;
using testutil::identity_order;
using testutil::make_instance;

TEST_CASE("instance validation and accessors") {
  const Instance ins = e4(1);
  CHECK(ins.n() == 4);
  CHECK(ins.stack_capacity() == 1);
  CHECK(ins.job(1).p == 25);
  CHECK(ins.job(4).d == 30);
  CHECK(ins.total_processing(1, 4) == 50);
  CHECK(ins.total_processing(2, 3) == 15);
  CHECK(ins.total_weight(1, 4) == 4);
  CHECK(ins.total_processing(3, 2) == 0);  // empty range

  // Completion times and latenesses of the initial order.
  const i64 c[] = {25, 35, 40, 50}, l[] = {-20, 20, 30, 20};
  for (int j = 1; j <= 4; ++j) {
    CHECK(ins.completion0(j) == c[j - 1]);
    CHECK(ins.lateness0(j) == l[j - 1]);
  }

  CHECK(ins.all_movable());
  CHECK(ins.movable_ids() == std::vector<int>{1, 2, 3, 4});
  const Instance frozen = ins.with_movable({false, true, true, false});
  CHECK(!frozen.all_movable());
  CHECK(frozen.movable_ids() == std::vector<int>{2, 3});
  CHECK(frozen.with_stack_capacity(7).stack_capacity() == 7);

  CHECK_THROWS_AS(Instance({}, 1), InvalidInput);
  CHECK_THROWS_AS(make_instance({1}, {1}, {1}, 0), InvalidInput);
  CHECK_THROWS_AS(make_instance({-1}, {1}, {1}, 1), InvalidInput);
  CHECK_THROWS_AS(make_instance({1}, {-1}, {1}, 1), InvalidInput);
  CHECK_THROWS_AS(make_instance({1}, {1}, {-1}, 1), InvalidInput);
}

TEST_CASE("evaluate_twct") {
  const Instance four = e4(1);
  CHECK(evaluate_twct(four, make_schedule(four, {1, 2, 3, 4})) == 150);
  const Instance one = make_instance({7}, {3}, {0}, 1);
  CHECK(evaluate_twct(one, make_schedule(one, {1})) == 21);
  const Instance two = make_instance({2, 1}, {1, 10}, {0, 0}, 1);
  CHECK(evaluate_twct(two, make_schedule(two, {2, 1})) == 13);
  CHECK_THROWS_AS(make_schedule(four, {1, 2, 3}), InvalidInput);
  CHECK_THROWS_AS(make_schedule(four, {1, 2, 3, 3}), InvalidInput);
}

TEST_CASE("evaluate_lmax") {
  const Instance four = e4(1);
  CHECK(evaluate_lmax(four, make_schedule(four, {1, 2, 3, 4})) == 30);
  CHECK(evaluate_lmax(four, make_schedule(four, {2, 1, 3, 4})) == 30);
  const Instance one = make_instance({5}, {1}, {5}, 1);
  CHECK(evaluate_lmax(one, make_schedule(one, {1})) == 0);
}

TEST_CASE("evaluate_num_late and weighted_late") {
  const Instance four = e4(1);
  CHECK(evaluate_num_late(four, make_schedule(four, {1, 2, 3, 4})) == 3);
  CHECK(evaluate_num_late(four, make_schedule(four, {2, 1, 3, 4})) == 2);
  const Instance relaxed = make_instance({2, 3}, {1, 1}, {5, 5}, 1);
  CHECK(evaluate_num_late(relaxed, make_schedule(relaxed, {1, 2})) == 0);
  CHECK(evaluate_weighted_late(relaxed, make_schedule(relaxed, {2, 1})) == 0);

  CHECK(evaluate_weighted_late(four, make_schedule(four, {1, 2, 3, 4})) == 3);
  const Instance weighted = e4(1, {1, 5, 2, 3});
  CHECK(evaluate_weighted_late(weighted, make_schedule(weighted, {1, 2, 3, 4})) == 10);
}

TEST_CASE("evaluate_phimax") {
  const Instance four = e4(1);
  const auto lateness = RegularFunctionSet::lateness(four);
  CHECK(evaluate_phimax(four, lateness, make_schedule(four, {1, 2, 3, 4})) == 30);

  // Two jobs p=(1,4) with phi1(x)=2x+150, phi2(x)=20x (x10 fixed-point
  // scaling of 0.2x+15 and 2x).
  const Instance two = make_instance({1, 4}, {1, 1}, {0, 0}, 1);
  const auto phi = RegularFunctionSet::affine(two, {{2, 150}, {20, 0}});
  CHECK(evaluate_phimax(two, phi, make_schedule(two, {1, 2})) == 152);
  CHECK(evaluate_phimax(two, phi, make_schedule(two, {2, 1})) == 160);
}

TEST_CASE("phimax with lateness equals lmax on every order") {
  std::mt19937 rng(99);
  const Instance ins = testutil::random_instance(rng, 5, 2);
  const auto phi = RegularFunctionSet::lateness(ins);
  std::vector<int> order = identity_order(5);
  do {
    const Schedule s = make_schedule(ins, order);
    CHECK(evaluate_phimax(ins, phi, s) == evaluate_lmax(ins, s));
    // Unit-weight reduction holds simultaneously.
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("unit weights collapse weighted_late to num_late") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    const Instance ins = testutil::random_instance(rng, 6, 2, 9, 1);
    std::vector<int> order = identity_order(6);
    std::shuffle(order.begin(), order.end(), rng);
    const Schedule s = make_schedule(ins, order);
    CHECK(evaluate_weighted_late(ins, s) == evaluate_num_late(ins, s));
    CHECK(s.completion[static_cast<size_t>(order.back())] == ins.total_processing(1, 6));
  }
}

TEST_CASE("regular function families") {
  const Instance four = e4(1);
  const auto wt = RegularFunctionSet::weighted_tardiness(e4(1, {2, 3, 1, 4}));
  CHECK(wt.eval(2, 10) == 0);    // before the due date
  CHECK(wt.eval(2, 20) == 15);   // 3 * (20 - 15)
  CHECK(wt.eval(1, 50) == 10);   // 2 * (50 - 45)
  CHECK_NOTHROW(wt.check_monotone(four.total_processing(1, 4)));

  CHECK_THROWS_AS(RegularFunctionSet::affine(four, {{-1, 0}, {0, 0}, {0, 0}, {0, 0}}),
                  InvalidInput);
  CHECK_THROWS_AS(RegularFunctionSet::affine(four, {{1, 0}}), InvalidInput);

  PhiSpec none;
  CHECK(RegularFunctionSet::from_spec(four, none).eval(3, 40) ==
        RegularFunctionSet::lateness(four).eval(3, 40));
}

TEST_CASE("objective names round-trip") {
  for (Objective obj : {Objective::Twct, Objective::Lmax, Objective::Phimax,
                        Objective::NumLate, Objective::WeightedLate})
    CHECK(objective_from_string(to_string(obj)) == obj);
  CHECK(!objective_from_string("nope").has_value());
}

TEST_CASE("instance text format round-trips") {
  const std::string text =
      "# demo\n"
      "4 2\n"
      "25 1 45\n"
      "10 1 15   # trailing comment\n"
      "5 1 10\n"
      "10 1 30\n"
      "omega 1 3\n"
      "phi affine 2,150 20,0 0,0 1,2\n";
  std::istringstream in(text);
  const ParsedInstance parsed = parse_instance(in);
  CHECK(parsed.instance.n() == 4);
  CHECK(parsed.instance.stack_capacity() == 2);
  CHECK(parsed.instance.movable_ids() == std::vector<int>{1, 3});
  CHECK(parsed.phi.family == PhiSpec::Family::Affine);
  REQUIRE(parsed.phi.affine.size() == 4);
  CHECK(parsed.phi.affine[0] == std::pair<i64, i64>{2, 150});

  std::ostringstream out;
  write_instance(out, parsed.instance, parsed.phi);
  std::istringstream in2(out.str());
  const ParsedInstance again = parse_instance(in2);
  CHECK(again.instance.n() == 4);
  CHECK(again.instance.movable_ids() == parsed.instance.movable_ids());
  CHECK(again.phi.affine == parsed.phi.affine);
  for (int j = 1; j <= 4; ++j) {
    CHECK(again.instance.job(j).p == parsed.instance.job(j).p);
    CHECK(again.instance.job(j).w == parsed.instance.job(j).w);
    CHECK(again.instance.job(j).d == parsed.instance.job(j).d);
  }
}

TEST_CASE("instance parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
  };
  CHECK_THROWS_AS(parse(""), InvalidInput);
  CHECK_THROWS_AS(parse("0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse("1 0\n1 1 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse("2 1\n1 1 1\n"), InvalidInput);            // missing job line
  CHECK_THROWS_AS(parse("1 1\n1 1\n"), InvalidInput);              // short job line
  CHECK_THROWS_AS(parse("1 1\n1 1 x\n"), InvalidInput);            // non-numeric
  CHECK_THROWS_AS(parse("1 1\n1 1 1\nomega 2\n"), InvalidInput);   // bad id
  CHECK_THROWS_AS(parse("1 1\n1 1 1\nphi affine\n"), InvalidInput);
  CHECK_THROWS_AS(parse("1 1\n1 1 1\nphi nope\n"), InvalidInput);
  CHECK_THROWS_AS(parse("1 1\n1 1 1\nbogus\n"), InvalidInput);
}

TEST_CASE("phi named families parse") {
  std::istringstream a("2 1\n1 1 1\n2 1 3\nphi lateness\n");
  CHECK(parse_instance(a).phi.family == PhiSpec::Family::Lateness);
  std::istringstream b("2 1\n1 1 1\n2 1 3\nphi weighted-tardiness\n");
  CHECK(parse_instance(b).phi.family == PhiSpec::Family::WeightedTardiness);
}

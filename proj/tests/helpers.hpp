// Shared builders for the unit tests.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lifo/model.hpp"

namespace testutil {

using lifo::i64;

inline lifo::Instance make_instance(const std::vector<i64>& p, const std::vector<i64>& w,
                                    const std::vector<i64>& d, int stack) {
  std::vector<lifo::Job> jobs;
  for (size_t k = 0; k < p.size(); ++k) jobs.push_back({0, p[k], w[k], d[k]});
  return lifo::Instance(std::move(jobs), stack);
}

// Canonical four-job example used throughout: p=(25,10,5,10), d=(45,15,10,30).
inline lifo::Instance e4(int stack, std::vector<i64> w = {1, 1, 1, 1}) {
  return make_instance({25, 10, 5, 10}, std::move(w), {45, 15, 10, 30}, stack);
}

inline std::vector<int> identity_order(int n) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return order;
}

// Minimum of `eval` over all n! orders (unconstrained reference).
template <typename Eval>
i64 exhaustive_min(const lifo::Instance& ins, Eval eval) {
  std::vector<int> order = identity_order(ins.n());
  i64 best = eval(lifo::make_schedule(ins, order));
  while (std::next_permutation(order.begin(), order.end()))
    best = std::min(best, eval(lifo::make_schedule(ins, order)));
  return best;
}

// Uniform random instance for property tests.
inline lifo::Instance random_instance(std::mt19937& rng, int n, int stack, i64 p_max = 20,
                                      i64 w_max = 20) {
  std::vector<i64> p, w, d;
  std::uniform_int_distribution<i64> dp(1, p_max), dw(1, w_max);
  i64 total = 0;
  for (int k = 0; k < n; ++k) {
    p.push_back(dp(rng));
    w.push_back(dw(rng));
    total += p.back();
  }
  std::uniform_int_distribution<i64> dd(1, std::max<i64>(total, 1));
  for (int k = 0; k < n; ++k) d.push_back(dd(rng));
  return make_instance(p, w, d, stack);
}

inline std::vector<bool> random_movable(std::mt19937& rng, int n) {
  std::vector<bool> movable(static_cast<size_t>(n));
  std::bernoulli_distribution coin(0.6);
  for (int k = 0; k < n; ++k) movable[static_cast<size_t>(k)] = coin(rng);
  return movable;
}

}  // namespace testutil

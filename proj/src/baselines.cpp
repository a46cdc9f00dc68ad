#include "lifo/baselines.hpp"

#include <algorithm>
#include <numeric>

namespace lifo {

namespace {

std::vector<int> ids_1_to_n(const Instance& ins) {
  std::vector<int> ids(static_cast<size_t>(ins.n()));
  std::iota(ids.begin(), ids.end(), 1);
  return ids;
}

}  // namespace

BaselineResult wspt(const Instance& ins) {
  std::vector<int> order = ids_1_to_n(ins);
  // p_a/w_a < p_b/w_b compared as p_a*w_b < p_b*w_a; only valid with positive
  // weights, so zero-weight jobs form their own trailing class (their
  // placement at the end never hurts: they cost nothing and delay nothing
  // that matters).
  std::sort(order.begin(), order.end(), [&ins](int a, int b) {
    const Job &ja = ins.job(a), &jb = ins.job(b);
    bool za = ja.w == 0, zb = jb.w == 0;
    if (za != zb) return zb;
    if (!za) {
      i64 lhs = ja.p * jb.w, rhs = jb.p * ja.w;
      if (lhs != rhs) return lhs < rhs;
    }
    return a < b;
  });
  BaselineResult res;
  res.schedule = make_schedule(ins, std::move(order));
  res.value = evaluate_twct(ins, res.schedule);
  return res;
}

BaselineResult edd(const Instance& ins) {
  std::vector<int> order = ids_1_to_n(ins);
  std::sort(order.begin(), order.end(), [&ins](int a, int b) {
    if (ins.job(a).d != ins.job(b).d) return ins.job(a).d < ins.job(b).d;
    return a < b;
  });
  BaselineResult res;
  res.schedule = make_schedule(ins, std::move(order));
  res.value = evaluate_lmax(ins, res.schedule);
  return res;
}

BaselineResult moore_hodgson(const Instance& ins) {
  std::vector<int> order = ids_1_to_n(ins);
  std::sort(order.begin(), order.end(), [&ins](int a, int b) {
    if (ins.job(a).d != ins.job(b).d) return ins.job(a).d < ins.job(b).d;
    return a < b;
  });
  std::vector<int> accepted, evicted;
  i64 t = 0;
  for (int id : order) {
    accepted.push_back(id);
    t += ins.job(id).p;
    if (t > ins.job(id).d) {
      // Drop the largest processing time accepted so far (first such in EDD
      // order on ties) -- the canonical exchange step.
      size_t worst = 0;
      for (size_t k = 1; k < accepted.size(); ++k)
        if (ins.job(accepted[k]).p > ins.job(accepted[worst]).p) worst = k;
      t -= ins.job(accepted[worst]).p;
      evicted.push_back(accepted[worst]);
      accepted.erase(accepted.begin() + static_cast<std::ptrdiff_t>(worst));
    }
  }
  std::sort(evicted.begin(), evicted.end());
  std::vector<int> full = accepted;
  full.insert(full.end(), evicted.begin(), evicted.end());
  BaselineResult res;
  res.value = static_cast<i64>(evicted.size());
  res.schedule = make_schedule(ins, std::move(full));
  return res;
}

i64 lawler_moore_weighted(const Instance& ins) {
  // Max-weight on-time set: a set is schedulable on time iff packing it in
  // EDD order meets every due date, so scan jobs in EDD order and do a
  // knapsack over the total processing time of the on-time set.
  std::vector<int> order = ids_1_to_n(ins);
  std::sort(order.begin(), order.end(), [&ins](int a, int b) {
    if (ins.job(a).d != ins.job(b).d) return ins.job(a).d < ins.job(b).d;
    return a < b;
  });
  const i64 horizon = ins.total_processing(1, ins.n());
  constexpr i64 kNone = -1;
  std::vector<i64> best(static_cast<size_t>(horizon) + 1, kNone);  // best[t] = max on-time weight with load t
  best[0] = 0;
  for (int id : order) {
    const Job& j = ins.job(id);
    for (i64 t = std::min(j.d, horizon); t >= j.p; --t) {
      if (best[static_cast<size_t>(t - j.p)] == kNone) continue;
      best[static_cast<size_t>(t)] =
          std::max(best[static_cast<size_t>(t)], best[static_cast<size_t>(t - j.p)] + j.w);
    }
  }
  i64 max_on_time = 0;
  for (i64 v : best) max_on_time = std::max(max_on_time, v);
  return ins.total_weight(1, ins.n()) - max_on_time;
}

i64 baseline_value(const Instance& ins, Objective obj) {
  switch (obj) {
    case Objective::Twct: return wspt(ins).value;
    case Objective::Lmax: return edd(ins).value;
    case Objective::NumLate: return moore_hodgson(ins).value;
    case Objective::WeightedLate: return lawler_moore_weighted(ins);
    case Objective::Phimax: break;
  }
  throw InvalidInput("no baseline for this objective");
}

}  // namespace lifo

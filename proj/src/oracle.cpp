#include "lifo/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "lifo/moves.hpp"

namespace lifo {

namespace {

void check_size(const Instance& ins, int limit) {
  if (ins.n() > limit)
    throw InvalidInput("oracle limited to n <= " + std::to_string(limit) +
                       " (got n = " + std::to_string(ins.n()) + ")");
}

// Enumerates reachable permutations without allocating per candidate.
template <typename Visit>
void for_each_feasible(const Instance& ins, int S, Visit&& visit) {
  const int n = ins.n();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  detail::ReconstructScratch scratch;
  do {
    auto level = detail::reconstruct_level(ins, perm, scratch);
    if (!level || *level > S) continue;
    if (!ins.all_movable()) {
      bool ok = true;
      for (const Move& m : scratch.moves)
        if (!ins.movable(m.from)) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

void enumerate_feasible(const Instance& ins, int S,
                        const std::function<void(const std::vector<int>&)>& visit,
                        int limit) {
  check_size(ins, limit);
  for_each_feasible(ins, S, visit);
}

std::vector<std::vector<int>> feasible_permutations(const Instance& ins, int S, int limit) {
  std::vector<std::vector<int>> out;
  enumerate_feasible(ins, S, [&out](const std::vector<int>& p) { out.push_back(p); }, limit);
  return out;
}

std::vector<OracleResult> oracle_optima(const Instance& ins, int S,
                                        const std::vector<Objective>& objs,
                                        int limit) {
  check_size(ins, limit);
  for (Objective o : objs)
    if (o == Objective::Phimax)
      throw InvalidInput("use oracle_optimum_phimax for the phimax objective");

  std::vector<i64> best(objs.size(), std::numeric_limits<i64>::max());
  std::vector<std::vector<int>> argbest(objs.size());
  std::vector<i64> vals(objs.size());
  for_each_feasible(ins, S, [&](const std::vector<int>& perm) {
    // Evaluate all requested objectives in one pass over the permutation.
    for (size_t o = 0; o < objs.size(); ++o)
      vals[o] = objs[o] == Objective::Lmax ? std::numeric_limits<i64>::min() : 0;
    i64 t = 0;
    for (int id : perm) {
      const Job& j = ins.job(id);
      t += j.p;
      for (size_t o = 0; o < objs.size(); ++o) {
        switch (objs[o]) {
          case Objective::Twct: vals[o] += j.w * t; break;
          case Objective::Lmax: vals[o] = std::max(vals[o], t - j.d); break;
          case Objective::NumLate: vals[o] += t > j.d ? 1 : 0; break;
          case Objective::WeightedLate: vals[o] += t > j.d ? j.w : 0; break;
          case Objective::Phimax: break;  // excluded above
        }
      }
    }
    for (size_t o = 0; o < objs.size(); ++o)
      if (vals[o] < best[o]) {
        best[o] = vals[o];
        argbest[o] = perm;
      }
  });

  std::vector<OracleResult> out;
  for (size_t o = 0; o < objs.size(); ++o)
    out.push_back({best[o], make_schedule(ins, argbest[o])});
  return out;
}

OracleResult oracle_optimum(const Instance& ins, int S, Objective obj, int limit) {
  return std::move(oracle_optima(ins, S, {obj}, limit).front());
}

OracleResult oracle_minimize(const Instance& ins, int S,
                             const std::function<i64(const Schedule&)>& cost,
                             int limit) {
  check_size(ins, limit);
  i64 best = std::numeric_limits<i64>::max();
  std::vector<int> argbest;
  for_each_feasible(ins, S, [&](const std::vector<int>& perm) {
    i64 v = cost(make_schedule(ins, perm));
    if (v < best) {
      best = v;
      argbest = perm;
    }
  });
  return {best, make_schedule(ins, argbest)};
}

OracleResult oracle_optimum_phimax(const Instance& ins, const RegularFunctionSet& phi,
                                   int S, int limit) {
  return oracle_minimize(
      ins, S, [&](const Schedule& s) { return evaluate_phimax(ins, phi, s); }, limit);
}

i64 oracle_subsequence_state(const Instance& ins, int i, int j, int m, int level,
                             int limit) {
  const int n = ins.n();
  if (i < 1 || j > n || i > j) throw InvalidInput("bad subsequence bounds");
  const int len = j - i + 1;
  if (m < 0 || m > len - 1) throw InvalidInput("bad rank m");
  if (level < 0) throw InvalidInput("bad level");
  if (len > limit) throw InvalidInput("subsequence oracle limited to short windows");

  // Sub-instance holding the window; positions are re-indexed 1..len, start
  // time stays the initial P(1, i-1).
  std::vector<Job> jobs;
  std::vector<bool> movable;
  for (int k = i; k <= j; ++k) {
    jobs.push_back(ins.job(k));
    movable.push_back(ins.movable(k));
  }
  Instance sub(std::move(jobs), std::max(level, 1), std::move(movable));
  const i64 start = ins.total_processing(1, i - 1);

  i64 best = std::numeric_limits<i64>::max();
  std::vector<i64> lates(static_cast<size_t>(len));
  auto consider = [&](const std::vector<int>& perm) {
    i64 t = start;
    for (int k = 0; k < len; ++k) {
      const Job& job = sub.job(perm[static_cast<size_t>(k)]);
      t += job.p;
      lates[static_cast<size_t>(k)] = t - job.d;
    }
    std::nth_element(lates.begin(), lates.begin() + m, lates.end(), std::greater<i64>());
    best = std::min(best, lates[static_cast<size_t>(m)]);
  };

  if (level == 0) {
    std::vector<int> identity(static_cast<size_t>(len));
    std::iota(identity.begin(), identity.end(), 1);
    consider(identity);
  } else {
    for_each_feasible(sub, level, consider);
  }
  return best;
}

}  // namespace lifo

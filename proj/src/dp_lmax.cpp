#include "lifo/dp_lmax.hpp"

#include <algorithm>
#include <cassert>

namespace lifo {

LmaxTables::LmaxTables(const Instance& ins, int max_level)
    : LmaxTables(ins, max_level, [&ins] {
        std::vector<i64> dues;
        for (int j = 1; j <= ins.n(); ++j) dues.push_back(ins.job(j).d);
        return dues;
      }()) {}

LmaxTables::LmaxTables(const Instance& ins, int max_level, std::vector<i64> dues)
    : n_(static_cast<size_t>(ins.n())), max_level_(max_level) {
  const int n = ins.n();
  if (dues.size() != n_) throw InvalidInput("need one due date per job");
  std::vector<i64> late0(n_ + 1, 0);  // initial lateness per job
  for (int j = 1; j <= n; ++j)
    late0[static_cast<size_t>(j)] = ins.total_processing(1, j) - dues[static_cast<size_t>(j) - 1];

  const size_t cells = static_cast<size_t>(max_level + 1) * (n_ + 1) * (n_ + 1);
  lam_.assign(cells, 0);
  g_.assign(cells, 0);
  split_.assign(cells, 0);

  // Level 0: max initial lateness of the window, no moves.
  for (int i = 1; i <= n; ++i) {
    i64 run = late0[static_cast<size_t>(i)];
    for (int j = i; j <= n; ++j) {
      run = std::max(run, late0[static_cast<size_t>(j)]);
      lam_[idx(i, j, 0)] = run;
      split_[idx(i, j, 0)] = i;
    }
  }

  for (int l = 1; l <= max_level; ++l) {
    for (int j = 1; j <= n; ++j) {
      for (int i = j; i >= 1; --i) {
        i64 g;
        if (i == j) {
          g = late0[static_cast<size_t>(i)];
        } else if (!ins.movable(i)) {
          g = kForbidden;
        } else {
          // Job i finishes P(i+1,j) later; the window behind it starts p_i
          // earlier and is rearranged with one level less.
          g = std::max(late0[static_cast<size_t>(i)] + ins.total_processing(i + 1, j),
                       lam_[idx(i + 1, j, l - 1)] - ins.job(i).p);
        }
        g_[idx(i, j, l)] = g;

        i64 best = 0;
        int best_k = i;
        bool first = true;
        for (int k = i; k <= j; ++k) {
          i64 gk = g_[idx(i, k, l)];
          if (gk == kForbidden) continue;
          i64 v = k < j ? std::max(gk, lam_[idx(k + 1, j, l)]) : gk;
          if (first || v < best) {
            best = v;
            best_k = k;
            first = false;
          }
        }
        lam_[idx(i, j, l)] = best;
        split_[idx(i, j, l)] = best_k;
      }
    }
  }
}

void LmaxTables::collect(int i, int j, int level, std::vector<Move>& out) const {
  if (i >= j) return;
  int k = split(i, j, level);
  if (k > i) {
    out.push_back({i, k});
    if (level >= 2) collect(i + 1, k, level - 1, out);
  }
  if (k < j) collect(k + 1, j, level, out);
}

MoveSet LmaxTables::reconstruct(int level) const {
  std::vector<Move> moves;
  collect(1, static_cast<int>(n_), level, moves);
  return MoveSet::build(std::move(moves));
}

LmaxTables build_lmax_tables(const Instance& ins) {
  return LmaxTables(ins, ins.stack_capacity());
}

SolveResult lmax_solution_at(const Instance& ins, const LmaxTables& tables, int level) {
  if (level < 1 || level > tables.max_level())
    throw InvalidInput("level out of range for these tables");
  SolveResult res;
  res.value = tables.best_lmax(1, ins.n(), level);
  res.moves = tables.reconstruct(level);
  res.schedule = apply_moves(ins, res.moves).schedule;
  return res;
}

SolveResult solve_lmax(const Instance& ins) {
  LmaxTables tables = build_lmax_tables(ins);
  return lmax_solution_at(ins, tables, ins.stack_capacity());
}

// ---------------------------------------------------------------------------
// phimax by binary search on the answer

namespace {

// Largest t in [0, t_max] with phi_j(t) <= bound, or -1 if none (the job then
// carries lateness >= 1 under any start, marking the bound infeasible).
i64 deadline_for_bound(const RegularFunctionSet& phi, int job, i64 bound, i64 t_max) {
  if (phi.eval(job, 0) > bound) return -1;
  i64 lo = 0, hi = t_max;
  while (lo < hi) {
    i64 mid = lo + (hi - lo + 1) / 2;
    if (phi.eval(job, mid) <= bound)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

SolveResult solve_phimax(const Instance& ins, const RegularFunctionSet& phi) {
  if (phi.n() != ins.n()) throw InvalidInput("phi set does not match instance size");
  const int n = ins.n();
  const i64 t_max = ins.total_processing(1, n);
  phi.check_monotone(t_max);

  i64 alpha = std::numeric_limits<i64>::min();  // no job can beat phi_j(p_j)
  i64 omega = std::numeric_limits<i64>::min();  // sigma0 achieves omega
  for (int j = 1; j <= n; ++j) {
    alpha = std::max(alpha, phi.eval(j, ins.job(j).p));
    omega = std::max(omega, phi.eval(j, ins.total_processing(1, j)));
  }

  std::vector<i64> dues(static_cast<size_t>(n));
  auto probe = [&](i64 bound) {
    for (int j = 1; j <= n; ++j)
      dues[static_cast<size_t>(j) - 1] = deadline_for_bound(phi, j, bound, t_max);
    return LmaxTables(ins, ins.stack_capacity(), dues);
  };
  auto feasible = [&](i64 bound) {
    return probe(bound).best_lmax(1, n, ins.stack_capacity()) <= 0;
  };

  i64 lo = alpha, hi = omega;
  while (lo < hi) {
    i64 mid = lo + (hi - lo) / 2;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid + 1;
  }

  LmaxTables witness = probe(lo);
  assert(witness.best_lmax(1, n, ins.stack_capacity()) <= 0);
  SolveResult res;
  res.value = lo;
  res.moves = witness.reconstruct(ins.stack_capacity());
  res.schedule = apply_moves(ins, res.moves).schedule;
  return res;
}

}  // namespace lifo

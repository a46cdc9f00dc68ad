#include "lifo/dp_twct.hpp"

#include <algorithm>

namespace lifo {

i64 move_cost(const Instance& ins, int i, int j) {
  return ins.job(i).w * ins.total_processing(i + 1, j) -
         ins.job(i).p * ins.total_weight(i + 1, j);
}

TwctTables::TwctTables(const Instance& ins, int max_level)
    : n_(static_cast<size_t>(ins.n())), max_level_(max_level) {
  const int n = ins.n();
  const size_t cells = static_cast<size_t>(max_level + 1) * (n_ + 1) * (n_ + 1);
  mu_.assign(cells, 0);
  c_.assign(cells, 0);
  split_.assign(cells, 0);

  for (int l = 1; l <= max_level; ++l) {
    for (int j = 1; j <= n; ++j) {
      for (int i = j; i >= 1; --i) {
        // c(i,j,l): move i -> j plus the best nested rearrangement (level l-1)
        // of the window i+1..j.  Identity windows cost nothing; unmovable
        // sources are forbidden outright, at every level.
        i64 c;
        if (i == j) {
          c = 0;
        } else if (!ins.movable(i)) {
          c = kForbidden;
        } else {
          c = move_cost(ins, i, j) + (l >= 2 ? mu_[idx(i + 1, j, l - 1)] : 0);
        }
        c_[idx(i, j, l)] = c;

        // mu(i,j,l) = min over split k: cost of handling i via (i -> k)
        // plus the best variation of the remainder k+1..j.
        i64 best = 0;
        int best_k = i;
        for (int k = i; k <= j; ++k) {
          i64 ck = c_[idx(i, k, l)];
          if (ck == kForbidden) continue;
          i64 v = ck + (k < j ? mu_[idx(k + 1, j, l)] : 0);
          if (k == i || v < best) {
            best = v;
            best_k = k;
          }
        }
        mu_[idx(i, j, l)] = best;
        split_[idx(i, j, l)] = best_k;
      }
    }
  }
}

void TwctTables::collect(int i, int j, int level, std::vector<Move>& out) const {
  if (i >= j) return;
  int k = split(i, j, level);
  if (k > i) {
    out.push_back({i, k});
    if (level >= 2) collect(i + 1, k, level - 1, out);
  }
  if (k < j) collect(k + 1, j, level, out);
}

MoveSet TwctTables::reconstruct(int level) const {
  std::vector<Move> moves;
  collect(1, static_cast<int>(n_), level, moves);
  return MoveSet::build(std::move(moves));
}

TwctTables build_twct_tables(const Instance& ins) {
  return TwctTables(ins, ins.stack_capacity());
}

SolveResult twct_solution_at(const Instance& ins, const TwctTables& tables, int level) {
  if (level < 1 || level > tables.max_level())
    throw InvalidInput("level out of range for these tables");
  SolveResult res;
  res.value = tables.variation(1, ins.n(), level);
  res.moves = tables.reconstruct(level);
  res.schedule = apply_moves(ins, res.moves).schedule;
  return res;
}

SolveResult solve_twct(const Instance& ins) {
  TwctTables tables = build_twct_tables(ins);
  return twct_solution_at(ins, tables, ins.stack_capacity());
}

}  // namespace lifo

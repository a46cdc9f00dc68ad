// Exact solvers for maximum lateness and, via binary search on the answer,
// for the maximum of arbitrary nondecreasing per-job cost functions.
//
// Lateness DP over initial-order windows (L_i = lateness of i in sigma0):
//   g(i,j,l)      = best max lateness of window i..j when job i moves to j
//                   with level <= l: the window behind i is rearranged at
//                   level l-1 and starts p_i earlier, while i itself finishes
//                   P(i+1,j) later;
//   lambda(i,j,l) = best max lateness of window i..j at level <= l, splitting
//                   at the position k the first move from i covers.
// lambda(i,j,0) is the plain initial-order maximum, which also serves as the
// inner term of level-1 moves.
//
// The phimax solver reduces to lateness feasibility probes: phi_max <= F is
// achievable iff every job meets the deadline tau_j(F) = max{t : phi_j(t) <= F},
// i.e. iff the lateness DP under due dates tau(F) reaches a value <= 0.  F is
// found by integer binary search between alpha = max_j phi_j(p_j) (nothing
// finishes before its own processing time) and omega = phi_max(sigma0).
#pragma once

#include "lifo/dp_twct.hpp"
#include "lifo/moves.hpp"

namespace lifo {

class LmaxTables {
 public:
  // Due dates from the instance, levels 1..max_level.
  LmaxTables(const Instance& ins, int max_level);
  // Custom due dates (may be negative, e.g. the -1 deadline marking a job
  // whose cost bound is unreachable even at t = 0).
  LmaxTables(const Instance& ins, int max_level, std::vector<i64> dues);

  int max_level() const { return max_level_; }
  // lambda(i,j,level); level 0 = initial order of the window
  i64 best_lmax(int i, int j, int level) const { return lam_[idx(i, j, level)]; }
  // g(i,j,level); kForbidden when job i must not move
  i64 move_option(int i, int j, int level) const { return g_[idx(i, j, level)]; }
  int split(int i, int j, int level) const { return split_[idx(i, j, level)]; }

  // Moves realizing lambda(1, n, level).
  MoveSet reconstruct(int level) const;

 private:
  size_t idx(int i, int j, int level) const {
    return (static_cast<size_t>(level) * (n_ + 1) + static_cast<size_t>(i)) * (n_ + 1) +
           static_cast<size_t>(j);
  }
  void collect(int i, int j, int level, std::vector<Move>& out) const;

  size_t n_;
  int max_level_;
  std::vector<i64> lam_, g_;
  std::vector<int> split_;
};

LmaxTables build_lmax_tables(const Instance& ins);

// Minimum reachable max lateness, an optimal schedule and the realizing moves.
SolveResult solve_lmax(const Instance& ins);
SolveResult lmax_solution_at(const Instance& ins, const LmaxTables& tables, int level);

// Minimum reachable max_j phi_j(C_j) for nondecreasing integer phi_j.
// Monotonicity is spot-checked (InvalidInput on failure).
SolveResult solve_phimax(const Instance& ins, const RegularFunctionSet& phi);

}  // namespace lifo

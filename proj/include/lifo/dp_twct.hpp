// Exact solver for the total weighted completion time objective.
//
// Moving job i behind window i+1..j changes sum w_j C_j by the fixed amount
//   m(i,j) = w_i * P(i+1,j) - p_i * W(i+1,j)
// independently of every other compatible move, so the total variation of a
// move set is just the sum of its per-move costs.  The DP searches the best
// compatible move set by splitting windows:
//   c(i,j,l)   = cheapest cost of a move (i -> j) at level <= l, including the
//                best rearrangement of the window i+1..j at level l-1;
//   mu(i,j,l)  = best total variation achievable inside window i..j at
//                level <= l (0 when i == j, always <= 0).
// The optimum for the instance is f(sigma0) + mu(1, n, S).
#pragma once

#include <limits>

#include "lifo/moves.hpp"

namespace lifo {

// Marker stored in DP cells representing moves of unmovable jobs; it never
// participates in sums or wins a minimum.
constexpr i64 kForbidden = std::numeric_limits<i64>::max();

// m(i,j): exact change of sum w C when job i alone moves behind window i+1..j.
i64 move_cost(const Instance& ins, int i, int j);

// DP tables for levels 1..max_level (cells are S-independent, so one build at
// the instance's capacity serves every smaller capacity too).
class TwctTables {
 public:
  TwctTables(const Instance& ins, int max_level);

  int max_level() const { return max_level_; }
  // mu(i,j,level); 0 when i >= j
  i64 variation(int i, int j, int level) const { return mu_[idx(i, j, level)]; }
  // c(i,j,level); kForbidden when job i must not move
  i64 move_option(int i, int j, int level) const { return c_[idx(i, j, level)]; }
  // argmin split position k in [i, j] behind mu(i,j,level); smallest k wins ties
  int split(int i, int j, int level) const { return split_[idx(i, j, level)]; }

  // Moves realizing mu(1, n, level).
  MoveSet reconstruct(int level) const;

 private:
  size_t idx(int i, int j, int level) const {
    return (static_cast<size_t>(level) * (n_ + 1) + static_cast<size_t>(i)) * (n_ + 1) +
           static_cast<size_t>(j);
  }
  void collect(int i, int j, int level, std::vector<Move>& out) const;

  size_t n_;
  int max_level_;
  std::vector<i64> mu_, c_;
  std::vector<int> split_;
};

TwctTables build_twct_tables(const Instance& ins);

// Optimal variation mu(1,n,S) (always <= 0), an optimal schedule and the
// realizing move set.  Unmovable jobs are never the source of a move.
SolveResult solve_twct(const Instance& ins);

// Solution for a smaller capacity read off prebuilt tables.
SolveResult twct_solution_at(const Instance& ins, const TwctTables& tables, int level);

}  // namespace lifo

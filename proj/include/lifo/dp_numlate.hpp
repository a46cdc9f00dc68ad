// Exact solver for the number of late jobs.
//
// Minimizing #late is equivalent to finding the smallest m such that the
// (m+1)-largest lateness over some reachable schedule is <= 0.  The DP state
//   s(i,j,m,l) = minimum, over rearrangements of window i..j with nesting
//                depth <= l, of the (m+1)-largest lateness in the window when
//                it starts at its initial time
// obeys a multiset recursion: if the first window job i moves to k (k = i
// meaning "stays"), the window's latenesses split into
//   - the inner window i+1..k, rearranged at level l-1 and started p_i early:
//     candidates s(i+1,k,u,l-1) - p_i for u = 0..k-i-1,
//   - the untouched right part k+1..j at level l: s(k+1,j,u,l),
//   - job i itself, completing at the initial C_k: C_k(sigma0) - d_i.
// Their union S(i,j,k,l) has exactly j-i+1 entries; s(i,j,m,l) is the minimum
// over k of its (m+1)-largest element.  (Taking ranks of the union is exact
// because each candidate list is the pointwise minimum over its own window's
// arrangements and ranks are monotone under pointwise domination.)
//
// Unmovable jobs only admit k = i.  The answer is min{m : s(1,n,m,S) <= 0},
// or n when even the best arrangement leaves every job late.
#pragma once

#include <iosfwd>

#include "lifo/moves.hpp"

namespace lifo {

class NumLateTables {
 public:
  NumLateTables(const Instance& ins, int max_level);

  int max_level() const { return max_level_; }
  int n() const { return static_cast<int>(n_); }

  // s(i,j,m,level) for 1 <= i <= j <= n, 0 <= m <= j-i, 0 <= level <= max.
  i64 state(int i, int j, int m, int level) const {
    return s_[cell(i, j, level) + static_cast<size_t>(m)];
  }
  // Split position chosen for s(i,j,m,level); ties resolved to the smallest k.
  int split(int i, int j, int m, int level) const {
    return split_[cell(i, j, level) + static_cast<size_t>(m)];
  }
  // The candidate multiset S(i,j,k,level), sorted nonincreasing.
  std::vector<i64> state_multiset(int i, int j, int k, int level) const;

  // min{m : s(1,n,m,level) <= 0}, or n if no rank works.
  i64 optimum(int level) const;
  // Moves realizing optimum(level).
  MoveSet reconstruct(int level) const;

  // Long-form dump: one row per (level,i,j) with the m-sequence across.
  void write_csv(std::ostream& out) const;

 private:
  size_t cell(int i, int j, int level) const {
    return static_cast<size_t>(level) * stride_ +
           off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)];
  }
  void build_multiset(int i, int j, int k, int level, std::vector<i64>& out) const;
  void collect(int i, int j, int m, int level, std::vector<Move>& out) const;

  Instance ins_;  // by value: the tables must not dangle
  size_t n_;
  int max_level_;
  size_t stride_;            // cells per level
  std::vector<size_t> off_;  // (i,j) -> base offset of its m-range
  std::vector<i64> late0_;   // initial lateness per job
  std::vector<i64> s_;
  std::vector<int> split_;
};

NumLateTables build_num_late_tables(const Instance& ins);

// Minimum reachable number of late jobs, with witness schedule and moves.
SolveResult solve_num_late(const Instance& ins);
SolveResult num_late_solution_at(const Instance& ins, const NumLateTables& tables,
                                 int level);

}  // namespace lifo

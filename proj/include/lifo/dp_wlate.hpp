// Exact solvers for the weighted number of late jobs.  Two pseudo-polynomial
// DPs are provided (the problem is NP-hard, see make_partition_instance):
//
//  * Time-indexed ("r"): r(i,j,t,l) = min weighted late inside window i..j
//    when the window starts t earlier than initially, rearranged at level
//    <= l.  Moving i to k costs rbar(i,k,t) = w_i if the initial C_k beats
//    the advanced due date (t < C_k - d_i), shifts the inner window by
//    t + p_i at level l-1 and leaves the right part at decrease t.  Table
//    size ~ n^2/2 * P(1,n) per level.
//
//  * Weight-indexed ("s~"): mirrors the number-of-late DP with weighted
//    ranks: s~(i,j,m,l) = min over rearrangements of the smallest lateness
//    threshold leaving weighted excess <= m; candidate multisets carry w_i
//    copies of the moved job's entry.  Table size ~ n^2/2 * W(1,n) per level.
//
// solve_wlate picks whichever bound is smaller (forceable), and refuses with
// ResourceLimit when the chosen table would exceed the memory budget.
#pragma once

#include <iosfwd>

#include "lifo/moves.hpp"

namespace lifo {

enum class WlateMethod { Auto, TimeIndexed, WeightIndexed };

struct WlateLimits {
  i64 memory_budget_bytes = i64{2} << 30;  // 2 GiB
};

class WlateTables {
 public:
  WlateTables(const Instance& ins, int max_level, const WlateLimits& limits = {});

  int max_level() const { return max_level_; }
  // r(i,j,t,level) for 1 <= i <= j <= n, 0 <= t <= P(1,i-1), 0 <= level
  i64 cost(int i, int j, i64 t, int level) const {
    return r_[static_cast<size_t>(level) * stride_ +
              off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)] +
              static_cast<size_t>(t)];
  }
  i64 optimum(int level) const { return cost(1, static_cast<int>(n_), 0, level); }
  MoveSet reconstruct(int level) const;

  // Bytes the value table will allocate (the refusal message quotes this).
  static i64 estimate_bytes(const Instance& ins, int max_level);

 private:
  i64 moved_cost(int i, int k, i64 t) const;  // rbar
  void collect(int i, int j, i64 t, int level, std::vector<Move>& out) const;

  Instance ins_;
  size_t n_;
  int max_level_;
  size_t stride_;
  std::vector<size_t> off_;
  std::vector<i64> r_;
};

class WlateAltTables {
 public:
  WlateAltTables(const Instance& ins, int max_level, const WlateLimits& limits = {});

  int max_level() const { return max_level_; }
  // s~(i,j,m,level) for 0 <= m < W(i,j)
  i64 state(int i, int j, int m, int level) const {
    return s_[static_cast<size_t>(level) * stride_ +
              off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)] +
              static_cast<size_t>(m)];
  }
  // min{m : s~(1,n,m,level) <= 0}, or W(1,n) if no rank works
  i64 optimum(int level) const;
  MoveSet reconstruct(int level) const;

  static i64 estimate_bytes(const Instance& ins, int max_level);

 private:
  int split(int i, int j, int m, int level) const;
  void build_multiset(int i, int j, int k, int level, std::vector<i64>& out) const;
  void collect(int i, int j, int m, int level, std::vector<Move>& out) const;

  Instance ins_;
  size_t n_;
  int max_level_;
  size_t stride_;
  std::vector<size_t> off_;
  std::vector<i64> s_;
  std::vector<int> split_;
};

// Minimum reachable sum of late weights, witness schedule and moves.
SolveResult solve_wlate(const Instance& ins, WlateMethod method = WlateMethod::Auto,
                        const WlateLimits& limits = {});
// The weight-indexed solver, callable directly.
SolveResult solve_wlate_alt(const Instance& ins, const WlateLimits& limits = {});

// Hardness reduction: jobs with p_i = w_i = a_i, common due date and
// threshold Q = floor(sum/2), stack capacity n/2.  The solver value is <= Q
// iff some subset of `values` sums to exactly half the total.
struct PartitionInstance {
  Instance instance;
  i64 threshold;  // Q
};
PartitionInstance make_partition_instance(const std::vector<i64>& values);

// Reference decider by subset enumeration (subset-sum to half the total).
bool partition_exists(const std::vector<i64>& values);

}  // namespace lifo

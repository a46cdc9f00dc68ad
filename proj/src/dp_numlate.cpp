#include "lifo/dp_numlate.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <ostream>

namespace lifo {

NumLateTables::NumLateTables(const Instance& ins, int max_level)
    : ins_(ins), n_(static_cast<size_t>(ins.n())), max_level_(max_level) {
  const int n = ins.n();
  off_.assign(n_ * n_, 0);
  size_t at = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)] = at;
      at += static_cast<size_t>(j - i + 1);
    }
  stride_ = at;
  s_.assign(static_cast<size_t>(max_level + 1) * stride_, 0);
  split_.assign(static_cast<size_t>(max_level + 1) * stride_, 0);

  late0_.assign(n_ + 1, 0);
  for (int j = 1; j <= n; ++j) late0_[static_cast<size_t>(j)] = ins.lateness0(j);

  // Level 0: latenesses of the untouched window, sorted nonincreasing.
  std::vector<i64> sorted;
  for (int i = 1; i <= n; ++i) {
    sorted.clear();
    for (int j = i; j <= n; ++j) {
      sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), late0_[static_cast<size_t>(j)],
                                     std::greater<i64>()),
                    late0_[static_cast<size_t>(j)]);
      size_t base = cell(i, j, 0);
      for (int m = 0; m < j - i + 1; ++m) {
        s_[base + static_cast<size_t>(m)] = sorted[static_cast<size_t>(m)];
        split_[base + static_cast<size_t>(m)] = i;
      }
    }
  }

  std::vector<i64> cand;
  for (int l = 1; l <= max_level; ++l) {
    for (int j = 1; j <= n; ++j) {
      for (int i = j; i >= 1; --i) {
        const int len = j - i + 1;
        const size_t base = cell(i, j, l);
        if (i == j) {
          s_[base] = late0_[static_cast<size_t>(i)];
          split_[base] = i;
          continue;
        }
        const int k_hi = ins.movable(i) ? j : i;  // unmovable jobs stay put
        bool first = true;
        for (int k = i; k <= k_hi; ++k) {
          build_multiset(i, j, k, l, cand);
          assert(static_cast<int>(cand.size()) == len);
          for (int m = 0; m < len; ++m) {
            i64 v = cand[static_cast<size_t>(m)];
            if (first || v < s_[base + static_cast<size_t>(m)]) {
              s_[base + static_cast<size_t>(m)] = v;
              split_[base + static_cast<size_t>(m)] = k;
            }
          }
          first = false;
        }
      }
    }
  }
}

// S(i,j,k,level): inner window candidates (started p_i early, one level
// less), right part candidates (same level), plus job i completing at the
// initial C_k.  Sorted nonincreasing.
void NumLateTables::build_multiset(int i, int j, int k, int level,
                                   std::vector<i64>& out) const {
  out.clear();
  const i64 p_i = ins_.job(i).p;
  for (int u = 0; u <= k - i - 1; ++u)
    out.push_back(state(i + 1, k, u, level - 1) - p_i);
  for (int u = 0; u <= j - k - 1; ++u)
    out.push_back(state(k + 1, j, u, level));
  out.push_back(ins_.completion0(k) - ins_.job(i).d);
  std::sort(out.begin(), out.end(), std::greater<i64>());
}

std::vector<i64> NumLateTables::state_multiset(int i, int j, int k, int level) const {
  if (i < 1 || j > static_cast<int>(n_) || i > j || k < i || k > j)
    throw InvalidInput("bad multiset cell");
  if (level < 1 || level > max_level_) throw InvalidInput("bad multiset level");
  if (k > i && !ins_.movable(i)) throw InvalidInput("job may not move");
  std::vector<i64> out;
  build_multiset(i, j, k, level, out);
  return out;
}

i64 NumLateTables::optimum(int level) const {
  const int n = static_cast<int>(n_);
  for (int m = 0; m <= n - 1; ++m)
    if (state(1, n, m, level) <= 0) return m;
  return n;  // every schedule leaves all jobs late
}

void NumLateTables::collect(int i, int j, int m, int level,
                            std::vector<Move>& out) const {
  if (i >= j || level == 0) return;
  const i64 v = state(i, j, m, level);
  const int k = split(i, j, m, level);
  const i64 p_i = ins_.job(i).p;
  if (k > i) {
    out.push_back({i, k});
    // Rank budget for the inner window: entries exceeding v must be covered
    // by m, so the smallest valid budget is their count (clamped to the
    // window's maximum rank when every entry exceeds v).
    int a = 0;
    for (int u = 0; u <= k - i - 1; ++u)
      if (state(i + 1, k, u, level - 1) - p_i > v) ++a;
    collect(i + 1, k, std::min(a, k - i - 1), level - 1, out);
  }
  if (k < j) {
    int b = 0;
    for (int u = 0; u <= j - k - 1; ++u)
      if (state(k + 1, j, u, level) > v) ++b;
    collect(k + 1, j, std::min(b, j - k - 1), level, out);
  }
}

MoveSet NumLateTables::reconstruct(int level) const {
  const int n = static_cast<int>(n_);
  i64 m = optimum(level);
  std::vector<Move> moves;
  if (m < n)  // m == n: nothing to gain, keep sigma0
    collect(1, n, static_cast<int>(m), level, moves);
  return MoveSet::build(std::move(moves));
}

void NumLateTables::write_csv(std::ostream& out) const {
  const int n = static_cast<int>(n_);
  out << "level,i,j";
  for (int m = 0; m < n; ++m) out << ",m" << m;
  out << '\n';
  for (int l = 0; l <= max_level_; ++l)
    for (int j = 1; j <= n; ++j)
      for (int i = j; i >= 1; --i) {
        out << l << ',' << i << ',' << j;
        for (int m = 0; m < n; ++m) {
          out << ',';
          if (m <= j - i) out << state(i, j, m, l);
        }
        out << '\n';
      }
}

NumLateTables build_num_late_tables(const Instance& ins) {
  return NumLateTables(ins, ins.stack_capacity());
}

SolveResult num_late_solution_at(const Instance& ins, const NumLateTables& tables,
                                 int level) {
  if (level < 1 || level > tables.max_level())
    throw InvalidInput("level out of range for these tables");
  SolveResult res;
  res.value = tables.optimum(level);
  res.moves = tables.reconstruct(level);
  res.schedule = apply_moves(ins, res.moves).schedule;
  return res;
}

SolveResult solve_num_late(const Instance& ins) {
  NumLateTables tables = build_num_late_tables(ins);
  return num_late_solution_at(ins, tables, ins.stack_capacity());
}

}  // namespace lifo

#include "lifo/dp_wlate.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace lifo {

// ---------------------------------------------------------------------------
// Time-indexed DP

i64 WlateTables::estimate_bytes(const Instance& ins, int max_level) {
  i64 cells = 0;
  for (int i = 1; i <= ins.n(); ++i)
    cells += (ins.total_processing(1, i - 1) + 1) * (ins.n() - i + 1);
  return cells * (max_level + 1) * static_cast<i64>(sizeof(i64));
}

WlateTables::WlateTables(const Instance& ins, int max_level, const WlateLimits& limits)
    : ins_(ins), n_(static_cast<size_t>(ins.n())), max_level_(max_level) {
  const i64 need = estimate_bytes(ins, max_level);
  if (need > limits.memory_budget_bytes)
    throw ResourceLimit("time-indexed weighted-late tables need " + std::to_string(need) +
                            " bytes (budget " + std::to_string(limits.memory_budget_bytes) +
                            "); lower n/S or use the weight-indexed solver",
                        need, limits.memory_budget_bytes);

  const int n = ins.n();
  off_.assign(n_ * n_, 0);
  size_t at = 0;
  for (int i = 1; i <= n; ++i) {
    const size_t extent = static_cast<size_t>(ins.total_processing(1, i - 1)) + 1;
    for (int j = i; j <= n; ++j) {
      off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)] = at;
      at += extent;
    }
  }
  stride_ = at;
  r_.assign(static_cast<size_t>(max_level + 1) * stride_, 0);

  auto slot = [this](int i, int j, int level) {
    return static_cast<size_t>(level) * stride_ +
           off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)];
  };

  // Level 0: weighted count of initially-late jobs in the window, as a
  // function of how much earlier the window starts.
  for (int i = 1; i <= n; ++i) {
    const i64 extent = ins.total_processing(1, i - 1) + 1;
    for (int j = i; j <= n; ++j) {
      i64* row = &r_[slot(i, j, 0)];
      if (j > i) {
        const i64* prev = &r_[slot(i, j - 1, 0)];
        std::copy(prev, prev + extent, row);
      } else {
        std::fill(row, row + extent, i64{0});
      }
      const i64 upto = std::min(ins.lateness0(j), extent);  // lateness > t
      for (i64 t = 0; t < upto; ++t) row[t] += ins.job(j).w;
    }
  }

  for (int l = 1; l <= max_level; ++l) {
    for (int j = 1; j <= n; ++j) {
      for (int i = j; i >= 1; --i) {
        const i64 extent = ins.total_processing(1, i - 1) + 1;
        i64* row = &r_[slot(i, j, l)];
        if (i == j) {
          for (i64 t = 0; t < extent; ++t) row[t] = moved_cost(i, i, t);
          continue;
        }
        const i64 p_i = ins.job(i).p;
        const i64* stay = &r_[slot(i + 1, j, l)];
        for (i64 t = 0; t < extent; ++t) {
          i64 best = stay[t] + moved_cost(i, i, t);  // k = i: job i stays
          if (ins.movable(i)) {
            for (int k = i + 1; k <= j; ++k) {
              // inner window i+1..k advanced by t + p_i at one level less
              i64 v = r_[slot(i + 1, k, l - 1) + static_cast<size_t>(t + p_i)] +
                      moved_cost(i, k, t);
              if (k < j) v += r_[slot(k + 1, j, l) + static_cast<size_t>(t)];
              best = std::min(best, v);
            }
          }
          row[t] = best;
        }
      }
    }
  }
}

// w_i if job i, moved behind the window ending at k, is late when everything
// started t earlier: completion C_k(sigma0) - t versus due date d_i.
i64 WlateTables::moved_cost(int i, int k, i64 t) const {
  return t < ins_.completion0(k) - ins_.job(i).d ? ins_.job(i).w : 0;
}

void WlateTables::collect(int i, int j, i64 t, int level, std::vector<Move>& out) const {
  if (i >= j || level == 0) return;
  const i64 target = cost(i, j, t, level);
  const i64 p_i = ins_.job(i).p;
  // Re-derive the smallest minimizing k (the table stores values only).
  int best_k = i;
  i64 best = cost(i + 1, j, t, level) + moved_cost(i, i, t);
  if (ins_.movable(i)) {
    for (int k = i + 1; k <= j && best > target; ++k) {
      i64 v = cost(i + 1, k, t + p_i, level - 1) + moved_cost(i, k, t);
      if (k < j) v += cost(k + 1, j, t, level);
      if (v < best) {
        best = v;
        best_k = k;
      }
    }
  }
  assert(best == target);
  if (best_k == i) {
    collect(i + 1, j, t, level, out);
  } else {
    out.push_back({i, best_k});
    collect(i + 1, best_k, t + p_i, level - 1, out);
    if (best_k < j) collect(best_k + 1, j, t, level, out);
  }
}

MoveSet WlateTables::reconstruct(int level) const {
  std::vector<Move> moves;
  collect(1, static_cast<int>(n_), 0, level, moves);
  return MoveSet::build(std::move(moves));
}

// ---------------------------------------------------------------------------
// Weight-indexed DP

i64 WlateAltTables::estimate_bytes(const Instance& ins, int max_level) {
  i64 cells = 0;
  for (int i = 1; i <= ins.n(); ++i)
    for (int j = i; j <= ins.n(); ++j) cells += ins.total_weight(i, j);
  return cells * (max_level + 1) * static_cast<i64>(sizeof(i64) + sizeof(int));
}

WlateAltTables::WlateAltTables(const Instance& ins, int max_level,
                               const WlateLimits& limits)
    : ins_(ins), n_(static_cast<size_t>(ins.n())), max_level_(max_level) {
  const i64 need = estimate_bytes(ins, max_level);
  if (need > limits.memory_budget_bytes)
    throw ResourceLimit("weight-indexed weighted-late tables need " + std::to_string(need) +
                            " bytes (budget " + std::to_string(limits.memory_budget_bytes) +
                            "); lower n/S or use the time-indexed solver",
                        need, limits.memory_budget_bytes);

  const int n = ins.n();
  off_.assign(n_ * n_, 0);
  size_t at = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)] = at;
      at += static_cast<size_t>(ins.total_weight(i, j));
    }
  stride_ = at;
  s_.assign(static_cast<size_t>(max_level + 1) * stride_, 0);
  split_.assign(static_cast<size_t>(max_level + 1) * stride_, 0);

  auto base = [this](int i, int j, int level) {
    return static_cast<size_t>(level) * stride_ +
           off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)];
  };

  // Level 0: group the window's initial latenesses in nonincreasing order;
  // rank m falls into the deepest group whose strictly-greater weight fits.
  std::vector<std::pair<i64, i64>> groups;  // (lateness, weight), desc by lateness
  for (int i = 1; i <= n; ++i) {
    groups.clear();
    for (int j = i; j <= n; ++j) {
      const i64 lj = ins.lateness0(j);
      auto it = std::lower_bound(groups.begin(), groups.end(), lj,
                                 [](const auto& g, i64 v) { return g.first > v; });
      if (it != groups.end() && it->first == lj)
        it->second += ins.job(j).w;
      else
        groups.insert(it, {lj, ins.job(j).w});

      i64* row = &s_[base(i, j, 0)];
      const i64 total = ins.total_weight(i, j);
      i64 prefix = 0;  // weight strictly above the current group
      for (const auto& [value, weight] : groups) {
        for (i64 m = prefix; m < std::min(prefix + weight, total); ++m) row[m] = value;
        prefix += weight;
      }
    }
  }

  std::vector<i64> cand;
  for (int l = 1; l <= max_level; ++l) {
    for (int j = 1; j <= n; ++j) {
      for (int i = j; i >= 1; --i) {
        const i64 len = ins.total_weight(i, j);
        if (len == 0) continue;
        i64* row = &s_[base(i, j, l)];
        int* krow = &split_[base(i, j, l)];
        const int k_hi = i < j && ins.movable(i) ? j : i;
        bool first = true;
        for (int k = i; k <= k_hi; ++k) {
          build_multiset(i, j, k, l, cand);
          assert(static_cast<i64>(cand.size()) == len);
          for (i64 m = 0; m < len; ++m) {
            if (first || cand[static_cast<size_t>(m)] < row[m]) {
              row[m] = cand[static_cast<size_t>(m)];
              krow[m] = k;
            }
          }
          first = false;
        }
      }
    }
  }
}

void WlateAltTables::build_multiset(int i, int j, int k, int level,
                                    std::vector<i64>& out) const {
  out.clear();
  const i64 p_i = ins_.job(i).p;
  for (i64 u = 0; u < ins_.total_weight(i + 1, k); ++u)
    out.push_back(state(i + 1, k, static_cast<int>(u), level - 1) - p_i);
  for (i64 u = 0; u < ins_.total_weight(k + 1, j); ++u)
    out.push_back(state(k + 1, j, static_cast<int>(u), level));
  const i64 moved = ins_.completion0(k) - ins_.job(i).d;
  for (i64 c = 0; c < ins_.job(i).w; ++c) out.push_back(moved);
  std::sort(out.begin(), out.end(), std::greater<i64>());
}

i64 WlateAltTables::optimum(int level) const {
  const int n = static_cast<int>(n_);
  const i64 total = ins_.total_weight(1, n);
  for (i64 m = 0; m < total; ++m)
    if (state(1, n, static_cast<int>(m), level) <= 0) return m;
  return total;
}

void WlateAltTables::collect(int i, int j, int m, int level,
                             std::vector<Move>& out) const {
  if (i >= j || level == 0) return;
  const i64 v = state(i, j, m, level);
  const int k = split(i, j, m, level);
  const i64 p_i = ins_.job(i).p;
  if (k > i) {
    out.push_back({i, k});
    const i64 inner = ins_.total_weight(i + 1, k);
    if (inner > 0) {
      i64 a = 0;
      for (i64 u = 0; u < inner; ++u)
        if (state(i + 1, k, static_cast<int>(u), level - 1) - p_i > v) ++a;
      collect(i + 1, k, static_cast<int>(std::min(a, inner - 1)), level - 1, out);
    }
  }
  if (k < j) {
    const i64 right = ins_.total_weight(k + 1, j);
    if (right > 0) {
      i64 b = 0;
      for (i64 u = 0; u < right; ++u)
        if (state(k + 1, j, static_cast<int>(u), level) > v) ++b;
      collect(k + 1, j, static_cast<int>(std::min(b, right - 1)), level, out);
    }
  }
}

int WlateAltTables::split(int i, int j, int m, int level) const {
  return split_[static_cast<size_t>(level) * stride_ +
                off_[static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1)] +
                static_cast<size_t>(m)];
}

MoveSet WlateAltTables::reconstruct(int level) const {
  const i64 m = optimum(level);
  std::vector<Move> moves;
  if (m < ins_.total_weight(1, static_cast<int>(n_)))
    collect(1, static_cast<int>(n_), static_cast<int>(m), level, moves);
  return MoveSet::build(std::move(moves));
}

// ---------------------------------------------------------------------------
// Entry points

SolveResult solve_wlate(const Instance& ins, WlateMethod method, const WlateLimits& limits) {
  if (method == WlateMethod::Auto) {
    // Pick the smaller pseudo-polynomial bound.
    method = ins.total_processing(1, ins.n()) <= ins.total_weight(1, ins.n())
                 ? WlateMethod::TimeIndexed
                 : WlateMethod::WeightIndexed;
  }
  SolveResult res;
  if (method == WlateMethod::TimeIndexed) {
    WlateTables tables(ins, ins.stack_capacity(), limits);
    res.value = tables.optimum(ins.stack_capacity());
    res.moves = tables.reconstruct(ins.stack_capacity());
  } else {
    WlateAltTables tables(ins, ins.stack_capacity(), limits);
    res.value = tables.optimum(ins.stack_capacity());
    res.moves = tables.reconstruct(ins.stack_capacity());
  }
  res.schedule = apply_moves(ins, res.moves).schedule;
  return res;
}

SolveResult solve_wlate_alt(const Instance& ins, const WlateLimits& limits) {
  return solve_wlate(ins, WlateMethod::WeightIndexed, limits);
}

PartitionInstance make_partition_instance(const std::vector<i64>& values) {
  const int n = static_cast<int>(values.size());
  if (n < 2 || n % 2 != 0) throw InvalidInput("partition reduction needs an even n >= 2");
  i64 total = 0;
  for (i64 a : values) {
    if (a < 1) throw InvalidInput("partition values must be positive");
    total += a;
  }
  const i64 half = total / 2;
  std::vector<Job> jobs;
  for (i64 a : values) jobs.push_back({0, a, a, half});
  return PartitionInstance{Instance(std::move(jobs), n / 2), half};
}

bool partition_exists(const std::vector<i64>& values) {
  const int n = static_cast<int>(values.size());
  if (n > 24) throw InvalidInput("partition decider limited to n <= 24");
  i64 total = std::accumulate(values.begin(), values.end(), i64{0});
  if (total % 2 != 0) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    i64 sum = 0;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) sum += values[static_cast<size_t>(b)];
    if (sum * 2 == total) return true;
  }
  return false;
}

}  // namespace lifo

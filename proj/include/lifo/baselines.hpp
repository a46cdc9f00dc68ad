// Classic unconstrained single-machine baselines.  They ignore the stack
// capacity entirely, so their values lower-bound what any reachable
// reordering can achieve; the benchmark reports DP-vs-baseline gaps.
#pragma once

#include "lifo/model.hpp"

namespace lifo {

struct BaselineResult {
  i64 value = 0;
  Schedule schedule;
};

// Weighted shortest processing time first: optimal for sum w_j C_j.
// Jobs sorted by nondecreasing p/w (exact rational comparison, zero-weight
// jobs last), ties by id.
BaselineResult wspt(const Instance& ins);

// Earliest due date first: optimal for max lateness.  Ties by id.
BaselineResult edd(const Instance& ins);

// Moore-Hodgson: optimal number of on-time jobs.  EDD scan; whenever the
// running completion time exceeds the current due date, the accepted job with
// the largest processing time is evicted.  Evicted jobs are appended at the
// end in id order; value = number of evicted (late) jobs.
BaselineResult moore_hodgson(const Instance& ins);

// Lawler-Moore pseudo-polynomial DP for min sum w_j U_j (value only).
i64 lawler_moore_weighted(const Instance& ins);

// The baseline value matching a solver objective (Twct -> wspt, Lmax -> edd,
// NumLate -> moore_hodgson, WeightedLate -> lawler_moore_weighted).
i64 baseline_value(const Instance& ins, Objective obj);

}  // namespace lifo

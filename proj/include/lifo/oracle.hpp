// Exhaustive reference implementations ("oracles") used to validate the DP
// solvers on small instances.  Everything here enumerates all n! permutations
// and filters by reachability, so calls are guarded by a hard size limit.
#pragma once

#include <functional>
#include <vector>

#include "lifo/model.hpp"

namespace lifo {

// Visits every permutation reachable with stack capacity S moving only jobs
// the instance marks movable, in lexicographic order.  Throws InvalidInput
// when n exceeds `limit`.
void enumerate_feasible(const Instance& ins, int S,
                        const std::function<void(const std::vector<int>&)>& visit,
                        int limit = 9);

std::vector<std::vector<int>> feasible_permutations(const Instance& ins, int S,
                                                    int limit = 9);

struct OracleResult {
  i64 value = 0;
  Schedule schedule;  // lexicographically smallest optimal permutation
};

// Minimum of the objective over all reachable permutations.
OracleResult oracle_optimum(const Instance& ins, int S, Objective obj, int limit = 9);

// Several objectives in one enumeration pass (same tie-breaking).
std::vector<OracleResult> oracle_optima(const Instance& ins, int S,
                                        const std::vector<Objective>& objs,
                                        int limit = 9);

// Minimum of an arbitrary schedule cost over all reachable permutations.
OracleResult oracle_minimize(const Instance& ins, int S,
                             const std::function<i64(const Schedule&)>& cost,
                             int limit = 9);

OracleResult oracle_optimum_phimax(const Instance& ins, const RegularFunctionSet& phi,
                                   int S, int limit = 9);

// Brute-force value of the subsequence state s(i, j, m, level): the minimum,
// over all rearrangements of window i..j realizable with nesting depth at
// most `level` (level 0 = initial order), of the (m+1)-largest lateness in
// the window when it starts at its initial time P(1, i-1).
i64 oracle_subsequence_state(const Instance& ins, int i, int j, int m, int level,
                             int limit = 9);

}  // namespace lifo

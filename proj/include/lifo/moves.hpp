// Move algebra for the LIFO device.
//
// A move (i -> j) with i <= j removes job i from the conveyor when it passes
// and reinserts it immediately after the jobs initially at positions i+1..j.
// Jobs can only be postponed, never advanced.  Two moves (i1->j1), (i2->j2)
// with i1 < i2 are compatible iff they are sequential (j1 < i2) or properly
// nested (i1 < i2 < j2 <= j1); i2 == j1 counts as an overlap and is rejected.
// The nesting depth of a move determines which stack slot holds its job, so a
// move set is executable iff its maximum nesting level is at most the stack
// capacity S.  Identity moves (i -> i) are no-ops: they are never stored,
// never pushed and never counted.
#pragma once

#include <optional>
#include <vector>

#include "lifo/model.hpp"

namespace lifo {

struct Move {
  int from = 0;
  int to = 0;
  bool identity() const { return from == to; }
  friend bool operator==(const Move&, const Move&) = default;
};

// A pairwise-compatible set of moves with distinct sources, canonically
// sorted by source.  Construction validates compatibility and computes the
// nesting level of every move (innermost moves have level 1).
class MoveSet {
 public:
  MoveSet() = default;  // empty set

  // Validates and canonicalizes; identity moves are dropped.  Throws
  // InvalidInput on duplicate sources, malformed or incompatible moves.
  static MoveSet build(std::vector<Move> moves);

  const std::vector<Move>& moves() const { return moves_; }
  // level of moves()[k]; 1 + max level of directly nested moves
  const std::vector<int>& levels() const { return levels_; }
  // max level over all moves = number of stack slots needed (0 when empty)
  int required_capacity() const { return required_; }
  bool empty() const { return moves_.empty(); }
  std::optional<Move> move_of(int from) const;

  friend bool operator==(const MoveSet&, const MoveSet&) = default;

 private:
  std::vector<Move> moves_;
  std::vector<int> levels_;
  int required_ = 0;
};

// One simulation event: at conveyor position `step`, `job` was pushed onto /
// popped from the stack, or passed straight through.  `occupancy` is the
// stack size right after the event.
struct TraceEvent {
  int step = 0;
  enum class Kind { Push, Pop, Pass } kind = Kind::Pass;
  int job = 0;
  int occupancy = 0;
};

// Full record of one device run.
struct StackTrace {
  std::vector<int> order;            // resulting permutation
  std::vector<int> occupancy_after;  // [k] = stack size after position k; [0] unused
  std::vector<TraceEvent> events;
};

struct StackMetrics {
  i64 moves_count = 0;      // jobs pushed (non-identity moves)
  int max_occupancy = 0;    // peak stack size
  double avg_occupancy = 0; // mean occupancy after positions 1..n-1
};

struct ApplyResult {
  Schedule schedule;
  StackTrace trace;
};

// Runs the device in initial-position order: at position k the job is pushed
// if it has a move, appended to the output otherwise; afterwards the stack
// pops (appending to the output) while its top's target equals k.  Throws
// CapacityExceeded if the move set needs more than S slots, InvalidInput if a
// move references a position beyond n.
ApplyResult apply_moves(const Instance& ins, const MoveSet& moves);

// The move set realizing `target`, if any: job i must be moved iff some job
// with a larger id precedes it, with target = the largest such id; the
// candidate set is then checked for compatibility and replayed.  Capacity and
// movable flags are NOT checked here -- the move set for a reachable
// permutation is unique, so callers inspect the result.
std::optional<MoveSet> reconstruct_move_set(const Instance& ins,
                                            const std::vector<int>& target);

// True iff `target` can be realized with stack capacity `S` moving only jobs
// the instance marks movable.
bool is_reachable(const Instance& ins, const std::vector<int>& target, int S);

StackMetrics stack_metrics(const StackTrace& trace);

// Move-script text format: one "i j" pair per line, '#' comments allowed.
std::vector<Move> parse_move_script(std::istream& in);
void write_move_script(std::ostream& out, const MoveSet& moves);
void write_trace_csv(std::ostream& out, const StackTrace& trace);

// Common output shape of the exact solvers: optimal value, a schedule
// attaining it, and the move set realizing that schedule (replayable through
// apply_moves).  solve_twct reports the variation relative to sigma0; the
// other solvers report absolute objective values.
struct SolveResult {
  i64 value = 0;
  Schedule schedule;
  MoveSet moves;
};

namespace detail {

// Allocation-free core used by the enumeration oracle's hot loop.
struct ReconstructScratch {
  std::vector<int> pos, to_of, stack, out, open_to, open_child;
  std::vector<Move> moves;
};

// If `order` is realizable by a compatible move set (ignoring capacity and
// movable flags), fills scratch.moves with that set (sorted by source) and
// returns its required capacity; nullopt otherwise.
std::optional<int> reconstruct_level(const Instance& ins,
                                     const std::vector<int>& order,
                                     ReconstructScratch& scratch);

}  // namespace detail

}  // namespace lifo

#include "lifo/moves.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace lifo {

namespace {

// Interval scan over moves sorted by source: maintains the chain of open
// moves; a new move must either start after the top closes (sequential) or
// end within it (properly nested).  On success fills `levels` (aligned with
// `moves`) and returns the maximum level; returns -1 on incompatibility.
int scan_levels(const std::vector<Move>& moves, std::vector<int>& levels) {
  levels.assign(moves.size(), 0);
  struct Open {
    int to;
    int max_child;
    size_t idx;
  };
  std::vector<Open> open;
  int required = 0;
  auto close_top = [&]() {
    Open o = open.back();
    open.pop_back();
    int level = o.max_child + 1;
    levels[o.idx] = level;
    required = std::max(required, level);
    if (!open.empty()) open.back().max_child = std::max(open.back().max_child, level);
  };
  for (size_t k = 0; k < moves.size(); ++k) {
    const Move& m = moves[k];
    while (!open.empty() && open.back().to < m.from) close_top();
    if (!open.empty() && m.to > open.back().to) return -1;  // overlap (incl. from == top.to)
    open.push_back({m.to, 0, k});
  }
  while (!open.empty()) close_top();
  return required;
}

}  // namespace

MoveSet MoveSet::build(std::vector<Move> moves) {
  std::erase_if(moves, [](const Move& m) { return m.identity(); });
  for (const Move& m : moves) {
    if (m.from < 1 || m.to < m.from)
      throw InvalidInput("move must satisfy 1 <= from <= to");
  }
  std::sort(moves.begin(), moves.end(),
            [](const Move& a, const Move& b) { return a.from < b.from; });
  for (size_t k = 1; k < moves.size(); ++k)
    if (moves[k].from == moves[k - 1].from)
      throw InvalidInput("two moves share source " + std::to_string(moves[k].from));
  MoveSet ms;
  int req = scan_levels(moves, ms.levels_);
  if (req < 0) throw InvalidInput("move set is not pairwise compatible");
  ms.moves_ = std::move(moves);
  ms.required_ = req;
  return ms;
}

std::optional<Move> MoveSet::move_of(int from) const {
  auto it = std::lower_bound(moves_.begin(), moves_.end(), from,
                             [](const Move& m, int f) { return m.from < f; });
  if (it != moves_.end() && it->from == from) return *it;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Simulation

namespace {

// Shared simulator: runs the device, filling order/occupancy/events.
// Assumes a compatible move set indexed by to_of[from] (0 = no move).
void simulate(int n, const std::vector<int>& to_of, StackTrace& trace) {
  trace.order.clear();
  trace.order.reserve(static_cast<size_t>(n));
  trace.occupancy_after.assign(static_cast<size_t>(n) + 1, 0);
  trace.events.clear();
  std::vector<int> stack;
  for (int k = 1; k <= n; ++k) {
    if (to_of[static_cast<size_t>(k)] != 0) {
      stack.push_back(k);
      trace.events.push_back({k, TraceEvent::Kind::Push, k, static_cast<int>(stack.size())});
    } else {
      trace.order.push_back(k);
      trace.events.push_back({k, TraceEvent::Kind::Pass, k, static_cast<int>(stack.size())});
    }
    while (!stack.empty() && to_of[static_cast<size_t>(stack.back())] == k) {
      int job = stack.back();
      stack.pop_back();
      trace.order.push_back(job);
      trace.events.push_back({k, TraceEvent::Kind::Pop, job, static_cast<int>(stack.size())});
    }
    trace.occupancy_after[static_cast<size_t>(k)] = static_cast<int>(stack.size());
  }
}

}  // namespace

ApplyResult apply_moves(const Instance& ins, const MoveSet& moves) {
  const int n = ins.n();
  std::vector<int> to_of(static_cast<size_t>(n) + 1, 0);
  for (const Move& m : moves.moves()) {
    if (m.to > n) throw InvalidInput("move target beyond last position");
    to_of[static_cast<size_t>(m.from)] = m.to;
  }
  if (moves.required_capacity() > ins.stack_capacity())
    throw CapacityExceeded("move set needs " + std::to_string(moves.required_capacity()) +
                           " stack slots but capacity is " +
                           std::to_string(ins.stack_capacity()));
  ApplyResult res;
  simulate(n, to_of, res.trace);
  res.schedule = make_schedule(ins, res.trace.order);
  return res;
}

// ---------------------------------------------------------------------------
// Reconstruction

namespace detail {

std::optional<int> reconstruct_level(const Instance& ins,
                                     const std::vector<int>& order,
                                     ReconstructScratch& s) {
  const int n = ins.n();
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  s.pos.assign(static_cast<size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    int id = order[static_cast<size_t>(k)];
    if (id < 1 || id > n || s.pos[static_cast<size_t>(id)] != 0) return std::nullopt;
    s.pos[static_cast<size_t>(id)] = k + 1;
  }

  // Job i is moved iff a larger id precedes it; the move target is the
  // largest such id, and the whole window i+1..to must precede i.
  s.moves.clear();
  s.to_of.assign(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int to = 0;
    for (int j = i + 1; j <= n; ++j)
      if (s.pos[static_cast<size_t>(j)] < s.pos[static_cast<size_t>(i)]) to = j;
    if (to == 0) continue;
    for (int k = i + 1; k <= to; ++k)
      if (s.pos[static_cast<size_t>(k)] > s.pos[static_cast<size_t>(i)]) return std::nullopt;
    s.moves.push_back({i, to});
    s.to_of[static_cast<size_t>(i)] = to;
  }

  // Compatibility + levels (moves are already sorted by source).
  s.open_to.clear();
  s.open_child.clear();
  int required = 0;
  auto close_top = [&]() {
    int level = s.open_child.back() + 1;
    s.open_to.pop_back();
    s.open_child.pop_back();
    required = std::max(required, level);
    if (!s.open_child.empty()) s.open_child.back() = std::max(s.open_child.back(), level);
  };
  for (const Move& m : s.moves) {
    while (!s.open_to.empty() && s.open_to.back() < m.from) close_top();
    if (!s.open_to.empty() && m.to > s.open_to.back()) return std::nullopt;
    s.open_to.push_back(m.to);
    s.open_child.push_back(0);
  }
  while (!s.open_to.empty()) close_top();

  // Replay and compare: the reconstruction is only valid if the device
  // actually reproduces the target.
  s.out.clear();
  s.stack.clear();
  for (int k = 1; k <= n; ++k) {
    if (s.to_of[static_cast<size_t>(k)] != 0)
      s.stack.push_back(k);
    else
      s.out.push_back(k);
    while (!s.stack.empty() && s.to_of[static_cast<size_t>(s.stack.back())] == k) {
      s.out.push_back(s.stack.back());
      s.stack.pop_back();
    }
  }
  if (s.out != order) return std::nullopt;
  return required;
}

}  // namespace detail

std::optional<MoveSet> reconstruct_move_set(const Instance& ins,
                                            const std::vector<int>& target) {
  detail::ReconstructScratch s;
  if (!detail::reconstruct_level(ins, target, s)) return std::nullopt;
  return MoveSet::build(std::move(s.moves));
}

bool is_reachable(const Instance& ins, const std::vector<int>& target, int S) {
  detail::ReconstructScratch s;
  auto level = detail::reconstruct_level(ins, target, s);
  if (!level || *level > S) return false;
  if (!ins.all_movable())
    for (const Move& m : s.moves)
      if (!ins.movable(m.from)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Metrics and text formats

StackMetrics stack_metrics(const StackTrace& trace) {
  StackMetrics m;
  for (const TraceEvent& e : trace.events)
    if (e.kind == TraceEvent::Kind::Push) ++m.moves_count;
  const int n = static_cast<int>(trace.occupancy_after.size()) - 1;
  i64 sum = 0;
  for (int k = 1; k <= n; ++k) {
    m.max_occupancy = std::max(m.max_occupancy, trace.occupancy_after[static_cast<size_t>(k)]);
    if (k <= n - 1) sum += trace.occupancy_after[static_cast<size_t>(k)];
  }
  m.avg_occupancy = n >= 2 ? static_cast<double>(sum) / (n - 1) : 0.0;
  return m;
}

std::vector<Move> parse_move_script(std::istream& in) {
  std::vector<Move> moves;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line.substr(0, line.find('#')));
    long long from, to;
    if (!(is >> from)) continue;  // blank / comment-only line
    if (!(is >> to))
      throw InvalidInput("move script line " + std::to_string(lineno) + ": expected 'i j'");
    std::string rest;
    if (is >> rest)
      throw InvalidInput("move script line " + std::to_string(lineno) + ": trailing tokens");
    moves.push_back({static_cast<int>(from), static_cast<int>(to)});
  }
  return moves;
}

void write_move_script(std::ostream& out, const MoveSet& moves) {
  for (const Move& m : moves.moves()) out << m.from << ' ' << m.to << '\n';
}

void write_trace_csv(std::ostream& out, const StackTrace& trace) {
  out << "step,occupancy,event\n";
  for (const TraceEvent& e : trace.events) {
    const char* kind = e.kind == TraceEvent::Kind::Push   ? "push"
                       : e.kind == TraceEvent::Kind::Pop ? "pop"
                                                         : "pass";
    out << e.step << ',' << e.occupancy << ',' << kind << ' ' << e.job << '\n';
  }
}

}  // namespace lifo

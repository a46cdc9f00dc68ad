#include "lifo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <thread>
#include <tuple>

#include "lifo/baselines.hpp"
#include "lifo/dp_lmax.hpp"
#include "lifo/dp_numlate.hpp"
#include "lifo/dp_twct.hpp"
#include "lifo/dp_wlate.hpp"
#include "lifo/moves.hpp"

namespace lifo {

namespace {

// splitmix64: portable fixed stream, unlike distribution<> over mt19937.
struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

i64 uniform_int(SplitMix& rng, i64 lo, i64 hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng.next();
  } while (x >= limit);
  return lo + static_cast<i64>(x % range);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix rng{seed ^ (salt * 0x9e3779b97f4a7c15ull + 1)};
  return rng.next();
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<Instance> generate(const GenConfig& cfg) {
  if (cfg.n < 1) throw InvalidInput("generator needs n >= 1");
  if (!(cfg.d_lo > 0.0 && cfg.d_lo <= cfg.d_hi && cfg.d_hi <= 1.0))
    throw InvalidInput("due-date fractions need 0 < d_lo <= d_hi <= 1");
  if (cfg.count < 1) throw InvalidInput("generator needs count >= 1");
  if (cfg.stack < 1) throw InvalidInput("generator needs stack >= 1");

  SplitMix rng{cfg.seed};
  std::vector<Instance> out;
  out.reserve(static_cast<size_t>(cfg.count));
  for (int rep = 0; rep < cfg.count; ++rep) {
    std::vector<Job> jobs(static_cast<size_t>(cfg.n));
    i64 total_p = 0;
    for (auto& j : jobs) total_p += j.p = uniform_int(rng, 1, 100);
    for (auto& j : jobs) j.w = uniform_int(rng, 1, 100);
    i64 d_lo = std::llround(static_cast<double>(total_p) * cfg.d_lo);
    i64 d_hi = std::llround(static_cast<double>(total_p) * cfg.d_hi);
    d_lo = std::max<i64>(d_lo, 0);
    d_hi = std::max(d_hi, d_lo);
    for (auto& j : jobs) j.d = uniform_int(rng, d_lo, d_hi);
    out.emplace_back(std::move(jobs), cfg.stack);
  }
  return out;
}

const std::vector<std::pair<double, double>>& due_date_classes() {
  static const std::vector<std::pair<double, double>> classes = [] {
    std::vector<std::pair<double, double>> v;
    for (double lo : {0.2, 0.4, 0.6, 0.8})
      for (double hi : {0.2, 0.4, 0.6, 0.8, 1.0})
        if (lo <= hi) v.emplace_back(lo, hi);
    return v;
  }();
  return classes;
}

double gap_value(Objective obj, i64 dp_value, i64 baseline, const Instance& ins) {
  switch (obj) {
    case Objective::Twct:
      if (baseline == 0)
        return dp_value == 0 ? 0.0 : std::numeric_limits<double>::infinity();
      return 100.0 * static_cast<double>(dp_value - baseline) /
             static_cast<double>(baseline);
    case Objective::Lmax: {
      const i64 span = ins.total_processing(1, ins.n());
      if (span == 0) return 0.0;
      return static_cast<double>(dp_value - baseline) / static_cast<double>(span);
    }
    case Objective::NumLate:
    case Objective::WeightedLate:
      return static_cast<double>(dp_value - baseline);
    case Objective::Phimax:
      break;
  }
  throw InvalidInput("no unconstrained baseline for objective phimax");
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LIFO_RESCHED_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

// Solve one (instance, objective) at every level 1..s_max.  Tables are
// level-indexed, so one build serves the whole S sweep.
void run_cell(const std::string& id, const Instance& ins, Objective obj, int s_max,
              std::vector<RunRecord>& rows, std::vector<std::string>& errors) {
  const std::string where = id + " " + to_string(obj);
  std::vector<RunRecord> local;
  try {
    const i64 base = baseline_value(ins, obj);
    const auto t0 = Clock::now();

    // One level extractor per objective, closing over its table set.
    std::function<SolveResult(int)> at_level;
    std::unique_ptr<TwctTables> twct;
    std::unique_ptr<LmaxTables> lmax;
    std::unique_ptr<NumLateTables> numlate;
    std::unique_ptr<WlateTables> wlate_r;
    std::unique_ptr<WlateAltTables> wlate_s;
    switch (obj) {
      case Objective::Twct:
        twct = std::make_unique<TwctTables>(ins, s_max);
        at_level = [&](int l) { return twct_solution_at(ins, *twct, l); };
        break;
      case Objective::Lmax:
        lmax = std::make_unique<LmaxTables>(ins, s_max);
        at_level = [&](int l) { return lmax_solution_at(ins, *lmax, l); };
        break;
      case Objective::NumLate:
        numlate = std::make_unique<NumLateTables>(ins, s_max);
        at_level = [&](int l) { return num_late_solution_at(ins, *numlate, l); };
        break;
      case Objective::WeightedLate:
        if (ins.total_processing(1, ins.n()) <= ins.total_weight(1, ins.n())) {
          wlate_r = std::make_unique<WlateTables>(ins, s_max);
          at_level = [&](int l) {
            SolveResult sr;
            sr.value = wlate_r->cost(1, ins.n(), 0, l);
            sr.moves = wlate_r->reconstruct(l);
            sr.schedule = apply_moves(ins, sr.moves).schedule;
            return sr;
          };
        } else {
          wlate_s = std::make_unique<WlateAltTables>(ins, s_max);
          at_level = [&](int l) {
            SolveResult sr;
            sr.value = wlate_s->optimum(l);
            sr.moves = wlate_s->reconstruct(l);
            sr.schedule = apply_moves(ins, sr.moves).schedule;
            return sr;
          };
        }
        break;
      case Objective::Phimax:
        throw InvalidInput("the study has no phimax baseline");
    }
    const double build_ms = ms_between(t0, Clock::now());

    for (int level = 1; level <= s_max; ++level) {
      const auto t1 = Clock::now();
      const SolveResult sr = at_level(level);
      const double extract_ms = ms_between(t1, Clock::now());

      RunRecord row;
      row.instance = id;
      row.objective = obj;
      row.n = ins.n();
      row.s = level;
      row.dp_value =
          obj == Objective::Twct ? evaluate_twct(ins, sr.schedule) : sr.value;
      row.baseline = base;
      row.gap = gap_value(obj, row.dp_value, base, ins);
      const StackMetrics metrics = stack_metrics(apply_moves(ins, sr.moves).trace);
      row.moves = metrics.moves_count;
      row.max_stack = metrics.max_occupancy;
      row.avg_stack = metrics.avg_occupancy;
      row.time_ms = extract_ms + build_ms / s_max;
      local.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    errors.push_back(where + ": " + e.what());
    return;
  }

  for (size_t k = 0; k + 1 < local.size(); ++k) {
    if (local[k + 1].gap > local[k].gap + 1e-9)
      errors.push_back("monotone-gap violation: " + where + " S=" +
                       std::to_string(local[k + 1].s) + " gap " +
                       format_double(local[k + 1].gap) + " > S=" +
                       std::to_string(local[k].s) + " gap " +
                       format_double(local[k].gap));
    if (local[k + 1].dp_value > local[k].dp_value)
      errors.push_back("monotone-value violation: " + where + " S=" +
                       std::to_string(local[k + 1].s));
    if (local[k].max_stack > local[k].s)
      errors.push_back("capacity violation: " + where + " S=" +
                       std::to_string(local[k].s));
  }

  rows = std::move(local);
}

}  // namespace

StudyResult run_study(const StudyConfig& cfg) {
  if (cfg.ns.empty()) throw InvalidInput("study needs at least one n");
  if (cfg.per_class < 1) throw InvalidInput("study needs per_class >= 1");
  if (cfg.s_max < 1) throw InvalidInput("study needs s_max >= 1");
  if (cfg.objectives.empty()) throw InvalidInput("study needs objectives");
  for (Objective obj : cfg.objectives)
    if (obj == Objective::Phimax)
      throw InvalidInput("the study has no phimax baseline");

  struct Item {
    std::string id;
    Instance ins;
  };
  std::vector<Item> items;
  for (int n : cfg.ns) {
    const auto& classes = due_date_classes();
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      GenConfig gen;
      gen.n = n;
      gen.d_lo = classes[ci].first;
      gen.d_hi = classes[ci].second;
      gen.count = cfg.per_class;
      gen.stack = cfg.s_max;
      gen.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(n) * 100 + ci);
      auto batch = generate(gen);
      for (int rep = 0; rep < cfg.per_class; ++rep) {
        char id[48];
        std::snprintf(id, sizeof id, "n%d-c%02zu-r%02d", n, ci + 1, rep);
        items.push_back({id, std::move(batch[static_cast<size_t>(rep)])});
      }
    }
  }

  struct Task {
    size_t item;
    Objective obj;
  };
  std::vector<Task> tasks;
  for (size_t it = 0; it < items.size(); ++it)
    for (Objective obj : cfg.objectives) tasks.push_back({it, obj});

  std::vector<std::vector<RunRecord>> rows_by_task(tasks.size());
  std::vector<std::vector<std::string>> errors_by_task(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      const Task& task = tasks[t];
      run_cell(items[task.item].id, items[task.item].ins, task.obj, cfg.s_max,
               rows_by_task[t], errors_by_task[t]);
    }
  };
  const int threads =
      std::min<int>(resolve_thread_count(cfg.threads), static_cast<int>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  StudyResult res;
  for (auto& chunk : rows_by_task)
    res.rows.insert(res.rows.end(), std::make_move_iterator(chunk.begin()),
                    std::make_move_iterator(chunk.end()));
  for (auto& chunk : errors_by_task)
    res.errors.insert(res.errors.end(), std::make_move_iterator(chunk.begin()),
                      std::make_move_iterator(chunk.end()));
  std::sort(res.rows.begin(), res.rows.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tuple(std::string(to_string(a.objective)), a.n, a.instance, a.s) <
           std::tuple(std::string(to_string(b.objective)), b.n, b.instance, b.s);
  });
  std::sort(res.errors.begin(), res.errors.end());

  const bool has_twct = std::find(cfg.objectives.begin(), cfg.objectives.end(),
                                  Objective::Twct) != cfg.objectives.end();
  if (has_twct) {
    std::string note = "twct gap at S=" + std::to_string(cfg.s_max) + ":";
    for (const AggregateRow& agg : aggregate_rows(res.rows))
      if (agg.objective == Objective::Twct && agg.s == cfg.s_max)
        note += " n=" + std::to_string(agg.n) + " -> " + format_double(agg.gap) + "%";
    res.twct_plateau_note = note;
  }
  return res;
}

void write_rows_csv(std::ostream& out, const std::vector<RunRecord>& rows) {
  out << "instance,objective,n,S,dp_value,baseline,gap,moves,max_stack,avg_stack,"
         "time_ms\n";
  char buf[64];
  for (const RunRecord& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
    out << r.instance << ',' << to_string(r.objective) << ',' << r.n << ',' << r.s
        << ',' << r.dp_value << ',' << r.baseline << ',' << format_double(r.gap)
        << ',' << r.moves << ',' << r.max_stack << ',' << format_double(r.avg_stack)
        << ',' << buf << '\n';
  }
}

std::vector<AggregateRow> aggregate_rows(const std::vector<RunRecord>& rows) {
  std::vector<AggregateRow> out;
  auto find = [&](Objective obj, int n, int s) -> AggregateRow& {
    for (AggregateRow& a : out)
      if (a.objective == obj && a.n == n && a.s == s) return a;
    out.push_back({obj, n, s, 0.0, 0.0, 0.0, 0.0, 0});
    return out.back();
  };
  for (const RunRecord& r : rows) {
    AggregateRow& a = find(r.objective, r.n, r.s);
    a.gap += r.gap;
    a.moves += r.moves;
    a.max_stack += r.max_stack;
    a.avg_stack += r.avg_stack;
    a.count += 1;
  }
  for (AggregateRow& a : out) {
    if (a.count == 0) continue;
    a.gap /= a.count;
    a.moves /= a.count;
    a.max_stack /= a.count;
    a.avg_stack /= a.count;
  }
  std::sort(out.begin(), out.end(), [](const AggregateRow& a, const AggregateRow& b) {
    return std::tuple(std::string(to_string(a.objective)), a.n, a.s) <
           std::tuple(std::string(to_string(b.objective)), b.n, b.s);
  });
  return out;
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "objective,n,S,gap,moves,max_stack,avg_stack,count\n";
  for (const AggregateRow& a : rows)
    out << to_string(a.objective) << ',' << a.n << ',' << a.s << ','
        << format_double(a.gap) << ',' << format_double(a.moves) << ','
        << format_double(a.max_stack) << ',' << format_double(a.avg_stack) << ','
        << a.count << '\n';
}

}  // namespace lifo

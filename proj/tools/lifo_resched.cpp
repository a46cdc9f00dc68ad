// lifo-resched: command-line front end for the LIFO rescheduling solvers.
//
// Subcommands: gen (random | partition), solve, oracle, baseline, apply,
// bench, plot.  Exit codes: 0 success, 1 input error (bad arguments, bad
// files, resource refusals), 2 invariant violation (a solver result failed
// its own consistency replay, or a study audit tripped).

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lifo/baselines.hpp"
#include "lifo/bench.hpp"
#include "lifo/dp_lmax.hpp"
#include "lifo/dp_numlate.hpp"
#include "lifo/dp_twct.hpp"
#include "lifo/dp_wlate.hpp"
#include "lifo/model.hpp"
#include "lifo/moves.hpp"
#include "lifo/oracle.hpp"
#include "lifo/plot.hpp"

namespace {

using namespace lifo;

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int g_exit = 0;  // callbacks park nonzero exits here (bench audit failures)

Objective parse_objective(const std::string& name) {
  if (auto obj = objective_from_string(name)) return *obj;
  throw InvalidInput("unknown objective '" + name +
                     "' (expected twct, lmax, phimax, numlate or wlate)");
}

// "-" or empty targets standard output.
void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw InvalidInput("failed while writing '" + path + "'");
}

std::string permutation_line(const std::vector<int>& order) {
  std::string s;
  for (size_t k = 0; k < order.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(order[k]);
  }
  return s;
}

i64 evaluate_objective(const Instance& ins, Objective obj, const PhiSpec& phi,
                       const Schedule& s) {
  switch (obj) {
    case Objective::Twct: return evaluate_twct(ins, s);
    case Objective::Lmax: return evaluate_lmax(ins, s);
    case Objective::Phimax:
      return evaluate_phimax(ins, RegularFunctionSet::from_spec(ins, phi), s);
    case Objective::NumLate: return evaluate_num_late(ins, s);
    case Objective::WeightedLate: return evaluate_weighted_late(ins, s);
  }
  throw InvalidInput("unsupported objective");
}

// ---------------------------------------------------------------------------
// gen

struct GenRandomArgs {
  GenConfig cfg;
  std::string out;
};

void run_gen_random(const GenRandomArgs& a) {
  if (a.cfg.count > 1 && (a.out.empty() || a.out == "-"))
    throw InvalidInput("--count > 1 needs --out as a file prefix");
  const auto instances = generate(a.cfg);
  for (size_t k = 0; k < instances.size(); ++k) {
    std::ostringstream body;
    body << "# generated: n=" << a.cfg.n << " d_lo=" << a.cfg.d_lo
         << " d_hi=" << a.cfg.d_hi << " seed=" << a.cfg.seed << " rep=" << k << "\n";
    write_instance(body, instances[k]);
    if (instances.size() == 1) {
      emit(a.out, body.str());
    } else {
      char suffix[16];
      std::snprintf(suffix, sizeof suffix, "-r%02zu.txt", k);
      emit(a.out + suffix, body.str());
    }
  }
}

struct GenPartitionArgs {
  std::string values;
  std::string out;
};

void run_gen_partition(const GenPartitionArgs& a) {
  std::vector<i64> values;
  std::stringstream ss(a.values);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      values.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InvalidInput("bad partition value '" + tok + "'");
    }
  }
  const PartitionInstance red = make_partition_instance(values);
  std::ostringstream body;
  body << "# partition reduction of {" << a.values << "}\n"
       << "# threshold Q=" << red.threshold
       << ": wlate optimum <= Q iff a subset sums to half the total\n";
  write_instance(body, red.instance);
  emit(a.out, body.str());
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string instance_path;
  std::string objective;
  int stack = 0;  // 0: keep the file's capacity
  bool alt_dp = false;
  i64 memory_budget_mb = 2048;
  std::string dump_tables;
  std::string moves_out;
};

void run_solve(const SolveArgs& a) {
  ParsedInstance parsed = parse_instance_file(a.instance_path);
  Instance ins = a.stack > 0 ? parsed.instance.with_stack_capacity(a.stack)
                             : std::move(parsed.instance);
  const Objective obj = parse_objective(a.objective);
  if (!a.dump_tables.empty() && obj != Objective::NumLate)
    throw InvalidInput("--dump-tables applies to --objective numlate only");
  if (a.alt_dp && obj != Objective::WeightedLate)
    throw InvalidInput("--alt-dp applies to --objective wlate only");

  WlateLimits limits;
  limits.memory_budget_bytes = a.memory_budget_mb << 20;

  SolveResult res;
  switch (obj) {
    case Objective::Twct: res = solve_twct(ins); break;
    case Objective::Lmax: res = solve_lmax(ins); break;
    case Objective::Phimax:
      res = solve_phimax(ins, RegularFunctionSet::from_spec(ins, parsed.phi));
      break;
    case Objective::NumLate: {
      NumLateTables tables(ins, ins.stack_capacity());
      if (!a.dump_tables.empty()) {
        std::ostringstream csv;
        tables.write_csv(csv);
        emit(a.dump_tables, csv.str());
      }
      res = num_late_solution_at(ins, tables, ins.stack_capacity());
      break;
    }
    case Objective::WeightedLate:
      res = solve_wlate(ins, a.alt_dp ? WlateMethod::WeightIndexed : WlateMethod::Auto,
                        limits);
      break;
  }

  // Replay the reported moves before printing anything: the witness must
  // reproduce the schedule, respect the capacity and evaluate to the value.
  const ApplyResult replay = apply_moves(ins, res.moves);
  if (replay.schedule.order != res.schedule.order)
    throw InvariantViolation("reconstructed moves do not reproduce the schedule");
  const i64 absolute = evaluate_objective(ins, obj, parsed.phi, res.schedule);
  std::vector<int> identity(static_cast<size_t>(ins.n()));
  for (int k = 0; k < ins.n(); ++k) identity[static_cast<size_t>(k)] = k + 1;
  const i64 expected =
      obj == Objective::Twct
          ? evaluate_twct(ins, make_schedule(ins, identity)) + res.value
          : res.value;
  if (absolute != expected)
    throw InvariantViolation("witness schedule evaluates to " +
                             std::to_string(absolute) + ", solver claims " +
                             std::to_string(expected));
  const StackMetrics metrics = stack_metrics(replay.trace);
  if (metrics.max_occupancy > ins.stack_capacity())
    throw InvariantViolation("witness needs more stack than allowed");

  std::ostringstream out;
  out << "objective: " << to_string(obj) << "\n"
      << "n: " << ins.n() << "\n"
      << "S: " << ins.stack_capacity() << "\n";
  if (obj == Objective::Phimax && parsed.phi.family == PhiSpec::Family::None)
    out << "phi: lateness (file had no phi line)\n";
  if (obj == Objective::Twct) out << "delta: " << res.value << "\n";
  out << "value: " << absolute << "\n"
      << "permutation: " << permutation_line(res.schedule.order) << "\n"
      << "moves: " << metrics.moves_count << " (max_stack " << metrics.max_occupancy
      << ", avg_stack " << metrics.avg_occupancy << ")\n";
  std::ostringstream script;
  write_move_script(script, res.moves);
  out << script.str();
  std::cout << out.str();
  if (!a.moves_out.empty()) emit(a.moves_out, script.str());
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string instance_path;
  std::string objective;
  int stack = 0;
  int limit = 9;
};

void run_oracle(const OracleArgs& a) {
  ParsedInstance parsed = parse_instance_file(a.instance_path);
  Instance ins = a.stack > 0 ? parsed.instance.with_stack_capacity(a.stack)
                             : std::move(parsed.instance);
  const Objective obj = parse_objective(a.objective);
  const OracleResult best =
      obj == Objective::Phimax
          ? oracle_optimum_phimax(ins, RegularFunctionSet::from_spec(ins, parsed.phi),
                                  a.limit)
          : oracle_optimum(ins, ins.stack_capacity(), obj, a.limit);
  std::cout << "objective: " << to_string(obj) << "\n"
            << "n: " << ins.n() << "\n"
            << "S: " << ins.stack_capacity() << "\n"
            << "value: " << best.value << "\n"
            << "permutation: " << permutation_line(best.schedule.order) << "\n";
}

// ---------------------------------------------------------------------------
// baseline

void run_baseline(const std::string& instance_path, const std::string& objective) {
  const ParsedInstance parsed = parse_instance_file(instance_path);
  const Instance& ins = parsed.instance;
  const Objective obj = parse_objective(objective);
  std::cout << "objective: " << to_string(obj) << "\n"
            << "baseline: " << baseline_value(ins, obj) << "\n";
  switch (obj) {
    case Objective::Twct:
      std::cout << "permutation: " << permutation_line(wspt(ins).schedule.order) << "\n";
      break;
    case Objective::Lmax:
      std::cout << "permutation: " << permutation_line(edd(ins).schedule.order) << "\n";
      break;
    case Objective::NumLate:
      std::cout << "permutation: " << permutation_line(moore_hodgson(ins).schedule.order)
                << "\n";
      break;
    default:
      break;  // lawler_moore_weighted is value-only
  }
}

// ---------------------------------------------------------------------------
// apply

struct ApplyArgs {
  std::string instance_path;
  std::string moves_path;
  std::string trace_out;
};

void run_apply(const ApplyArgs& a) {
  const ParsedInstance parsed = parse_instance_file(a.instance_path);
  const Instance& ins = parsed.instance;
  std::ifstream in(a.moves_path);
  if (!in) throw InvalidInput("cannot open move script '" + a.moves_path + "'");
  const std::vector<Move> raw = parse_move_script(in);
  for (const Move& m : raw)
    if (!m.identity() && (m.from < 1 || m.from > ins.n() || !ins.movable(m.from)))
      throw InvalidInput("job " + std::to_string(m.from) + " may not be moved");
  const MoveSet moves = MoveSet::build(raw);
  const ApplyResult result = apply_moves(ins, moves);
  const StackMetrics metrics = stack_metrics(result.trace);

  std::cout << "n: " << ins.n() << "\n"
            << "S: " << ins.stack_capacity() << "\n"
            << "permutation: " << permutation_line(result.schedule.order) << "\n"
            << "twct: " << evaluate_twct(ins, result.schedule) << "\n"
            << "lmax: " << evaluate_lmax(ins, result.schedule) << "\n"
            << "numlate: " << evaluate_num_late(ins, result.schedule) << "\n"
            << "wlate: " << evaluate_weighted_late(ins, result.schedule) << "\n"
            << "moves: " << metrics.moves_count << "\n"
            << "max_stack: " << metrics.max_occupancy << "\n"
            << "avg_stack: " << metrics.avg_occupancy << "\n";
  if (!a.trace_out.empty()) {
    std::ostringstream csv;
    write_trace_csv(csv, result.trace);
    emit(a.trace_out, csv.str());
  }
}

// ---------------------------------------------------------------------------
// bench & plot

struct BenchArgs {
  StudyConfig cfg;
  std::vector<std::string> objectives = {"twct", "lmax", "numlate"};
  std::string out_dir = ".";
};

void write_study_outputs(const StudyResult& result, const std::string& out_dir,
                         const std::vector<Objective>& objectives) {
  std::filesystem::create_directories(out_dir);
  const auto aggregates = aggregate_rows(result.rows);
  {
    std::ostringstream csv;
    write_rows_csv(csv, result.rows);
    emit(out_dir + "/rows.csv", csv.str());
  }
  {
    std::ostringstream csv;
    write_aggregate_csv(csv, aggregates);
    emit(out_dir + "/aggregate.csv", csv.str());
  }
  for (Objective obj : objectives) {
    std::ostringstream svg;
    write_svg_panels(svg, std::string("stack-size study - ") + to_string(obj),
                     study_panels(aggregates, obj));
    emit(out_dir + "/" + to_string(obj) + ".svg", svg.str());
  }
}

void run_bench(const BenchArgs& a) {
  StudyConfig cfg = a.cfg;
  cfg.objectives.clear();
  for (const std::string& name : a.objectives)
    cfg.objectives.push_back(parse_objective(name));

  const StudyResult result = run_study(cfg);
  write_study_outputs(result, a.out_dir, cfg.objectives);

  std::cout << "rows: " << result.rows.size() << "\n"
            << "outputs: " << a.out_dir << "/rows.csv, " << a.out_dir
            << "/aggregate.csv";
  for (Objective obj : cfg.objectives)
    std::cout << ", " << a.out_dir << "/" << to_string(obj) << ".svg";
  std::cout << "\n";
  if (!result.twct_plateau_note.empty())
    std::cout << result.twct_plateau_note << "\n";
  if (!result.errors.empty()) {
    for (const std::string& e : result.errors) std::cerr << "audit: " << e << "\n";
    g_exit = 2;
  }
}

std::vector<RunRecord> read_rows_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open rows CSV '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw InvalidInput("empty rows CSV '" + path + "'");
  std::vector<RunRecord> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 11)
      throw InvalidInput(path + ":" + std::to_string(line_no) +
                         ": expected 11 columns, found " +
                         std::to_string(cells.size()));
    try {
      RunRecord r;
      r.instance = cells[0];
      r.objective = parse_objective(cells[1]);
      r.n = std::stoi(cells[2]);
      r.s = std::stoi(cells[3]);
      r.dp_value = std::stoll(cells[4]);
      r.baseline = std::stoll(cells[5]);
      r.gap = std::stod(cells[6]);
      r.moves = std::stoi(cells[7]);
      r.max_stack = std::stoi(cells[8]);
      r.avg_stack = std::stod(cells[9]);
      r.time_ms = std::stod(cells[10]);
      rows.push_back(std::move(r));
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidInput(path + ":" + std::to_string(line_no) + ": malformed row");
    }
  }
  return rows;
}

void run_plot(const std::string& rows_path, const std::string& out_dir) {
  const std::vector<RunRecord> rows = read_rows_csv(rows_path);
  if (rows.empty()) throw InvalidInput("rows CSV has no data rows");
  std::vector<Objective> objectives;
  for (const RunRecord& r : rows)
    if (std::find(objectives.begin(), objectives.end(), r.objective) ==
        objectives.end())
      objectives.push_back(r.objective);
  std::filesystem::create_directories(out_dir);
  const auto aggregates = aggregate_rows(rows);
  for (Objective obj : objectives) {
    std::ostringstream svg;
    write_svg_panels(svg, std::string("stack-size study - ") + to_string(obj),
                     study_panels(aggregates, obj));
    emit(out_dir + "/" + to_string(obj) + ".svg", svg.str());
    std::cout << out_dir << "/" << to_string(obj) << ".svg\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LIFO-stack rescheduling: exact solvers, oracle, baselines and "
               "the stack-size study"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instance files");
  gen->require_subcommand(1);
  GenRandomArgs gen_random;
  auto* genr = gen->add_subcommand("random", "Uniform random instances");
  genr->add_option("--n", gen_random.cfg.n, "jobs per instance")->required();
  genr->add_option("--d-lo", gen_random.cfg.d_lo, "lower due-date fraction");
  genr->add_option("--d-hi", gen_random.cfg.d_hi, "upper due-date fraction");
  genr->add_option("--count", gen_random.cfg.count, "instances to generate");
  genr->add_option("--stack", gen_random.cfg.stack, "stack capacity S");
  genr->add_option("--seed", gen_random.cfg.seed, "RNG seed");
  genr->add_option("--out", gen_random.out, "output file ('-' stdout; prefix when --count > 1)");
  genr->callback([&] { run_gen_random(gen_random); });

  GenPartitionArgs gen_partition;
  auto* genp = gen->add_subcommand("partition", "Hardness-reduction instance");
  genp->add_option("--values", gen_partition.values, "comma-separated integers")
      ->required();
  genp->add_option("--out", gen_partition.out, "output file ('-' = stdout)");
  genp->callback([&] { run_gen_partition(gen_partition); });

  // solve
  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Exact capacity-S optimum");
  solve->add_option("instance", solve_args.instance_path, "instance file")->required();
  solve->add_option("--objective", solve_args.objective,
                    "twct | lmax | phimax | numlate | wlate")->required();
  solve->add_option("--stack", solve_args.stack, "override the file's S");
  solve->add_flag("--alt-dp", solve_args.alt_dp, "wlate: force the weight-indexed DP");
  solve->add_option("--memory-budget-mb", solve_args.memory_budget_mb,
                    "wlate table budget (MiB)");
  solve->add_option("--dump-tables", solve_args.dump_tables,
                    "numlate: write the s-table CSV here ('-' = stdout)");
  solve->add_option("--moves-out", solve_args.moves_out, "write the move script here");
  solve->callback([&] { run_solve(solve_args); });

  // oracle
  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum (small n)");
  oracle->add_option("instance", oracle_args.instance_path, "instance file")->required();
  oracle->add_option("--objective", oracle_args.objective,
                     "twct | lmax | phimax | numlate | wlate")->required();
  oracle->add_option("--stack", oracle_args.stack, "override the file's S");
  oracle->add_option("--limit", oracle_args.limit, "refuse n beyond this (default 9)");
  oracle->callback([&] { run_oracle(oracle_args); });

  // baseline
  std::string baseline_instance, baseline_objective;
  auto* baseline = app.add_subcommand("baseline", "Unconstrained reference optimum");
  baseline->add_option("instance", baseline_instance, "instance file")->required();
  baseline->add_option("--objective", baseline_objective,
                       "twct | lmax | numlate | wlate")->required();
  baseline->callback([&] { run_baseline(baseline_instance, baseline_objective); });

  // apply
  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Replay a move script");
  apply->add_option("instance", apply_args.instance_path, "instance file")->required();
  apply->add_option("--moves", apply_args.moves_path, "move script ('i j' lines)")
      ->required();
  apply->add_option("--trace", apply_args.trace_out, "write the stack trace CSV here");
  apply->callback([&] { run_apply(apply_args); });

  // bench
  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Stack-size study (CSV + SVG)");
  bench->add_option("--n", bench_args.cfg.ns, "instance sizes (default 20 50)");
  bench->add_option("--per-class", bench_args.cfg.per_class,
                    "instances per due-date class");
  bench->add_option("--s-max", bench_args.cfg.s_max, "largest stack capacity");
  bench->add_option("--seed", bench_args.cfg.seed, "RNG seed");
  bench->add_option("--objectives", bench_args.objectives,
                    "objectives to run (default twct lmax numlate)");
  bench->add_option("--threads", bench_args.cfg.threads,
                    "worker threads (0: LIFO_RESCHED_THREADS or hardware)");
  bench->add_option("--out", bench_args.out_dir, "output directory");
  bench->callback([&] { run_bench(bench_args); });

  // plot
  std::string plot_rows, plot_out = ".";
  auto* plot = app.add_subcommand("plot", "Re-render SVGs from a rows CSV");
  plot->add_option("--rows", plot_rows, "rows.csv produced by bench")->required();
  plot->add_option("--out", plot_out, "output directory");
  plot->callback([&] { run_plot(plot_rows, plot_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}

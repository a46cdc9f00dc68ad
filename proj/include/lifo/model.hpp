// Core problem model: jobs, instances, schedules, objective evaluators and
// the plain-text instance format.
//
// Conventions used throughout the library:
//   * jobs are identified by their position 1..n in the initial sequence
//     sigma0, i.e. "job i" and "the job at initial position i" coincide;
//   * schedules start at time 0 and contain no idle time;
//   * all times/costs are exact 64-bit integers, a job is late iff its
//     completion time is strictly greater than its due date.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lifo {

using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Errors

// Malformed instance/schedule/move input.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A move set that needs more stack slots than the instance provides.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver refused to run because its tables would exceed the memory budget.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, i64 required, i64 budget)
      : std::runtime_error(what), required_bytes(required), budget_bytes(budget) {}
  i64 required_bytes;
  i64 budget_bytes;
};

// ---------------------------------------------------------------------------
// Instance

struct Job {
  int id = 0;  // 1-based position in sigma0
  i64 p = 0;   // processing time, >= 0
  i64 w = 0;   // weight, >= 0
  i64 d = 0;   // due date, >= 0
};

enum class Objective { Twct, Lmax, Phimax, NumLate, WeightedLate };

const char* to_string(Objective obj);
std::optional<Objective> objective_from_string(const std::string& name);

// An instance: the initial sequence sigma0 (jobs in index order), the stack
// capacity S >= 1 and the set of movable jobs (all jobs unless an "omega"
// restriction was given).  Prefix sums of p and w are precomputed so that
// P(i,j) and W(i,j) queries are O(1).
class Instance {
 public:
  // `jobs` in sigma0 order; ids are assigned 1..n regardless of Job::id input.
  // `movable` empty means "all movable", otherwise one flag per job.
  Instance(std::vector<Job> jobs, int stack_capacity,
           std::vector<bool> movable = {});

  int n() const { return static_cast<int>(jobs_.size()); }
  int stack_capacity() const { return stack_; }
  const Job& job(int id) const { return jobs_[static_cast<size_t>(id) - 1]; }
  const std::vector<Job>& jobs() const { return jobs_; }

  bool movable(int id) const { return movable_[static_cast<size_t>(id) - 1]; }
  bool all_movable() const { return all_movable_; }
  // ids of movable jobs, ascending (the Omega set)
  std::vector<int> movable_ids() const;

  // P(i,j) = sum of p over jobs i..j of sigma0; zero when i > j.
  i64 total_processing(int i, int j) const {
    return j < i ? 0 : prefix_p_[static_cast<size_t>(j)] - prefix_p_[static_cast<size_t>(i) - 1];
  }
  // W(i,j) = sum of w over jobs i..j of sigma0; zero when i > j.
  i64 total_weight(int i, int j) const {
    return j < i ? 0 : prefix_w_[static_cast<size_t>(j)] - prefix_w_[static_cast<size_t>(i) - 1];
  }

  // Completion time / lateness of job j in the *initial* sequence.
  i64 completion0(int j) const { return total_processing(1, j); }
  i64 lateness0(int j) const { return completion0(j) - job(j).d; }

  // Cheap copies with one field swapped; used by sweeps and the CLI.
  Instance with_stack_capacity(int stack_capacity) const;
  Instance with_movable(std::vector<bool> movable) const;

 private:
  std::vector<Job> jobs_;
  int stack_ = 1;
  std::vector<bool> movable_;
  bool all_movable_ = true;
  std::vector<i64> prefix_p_, prefix_w_;  // index 0 = 0
};

// ---------------------------------------------------------------------------
// Schedules and objective evaluation

// A concrete schedule: a permutation of 1..n plus per-job completion times
// and latenesses (indexed by job id, entry 0 unused).
struct Schedule {
  std::vector<int> order;
  std::vector<i64> completion;
  std::vector<i64> lateness;

  i64 completion_of(int id) const { return completion[static_cast<size_t>(id)]; }
  i64 lateness_of(int id) const { return lateness[static_cast<size_t>(id)]; }
};

// Validates that `order` is a permutation of 1..n and computes completion
// times (start at 0, no idle).  Throws InvalidInput otherwise.
Schedule make_schedule(const Instance& ins, std::vector<int> order);

// Objective evaluators.  Each revalidates the permutation (InvalidInput on a
// non-permutation) and works from the order alone, so they can be used as
// independent checks against solver output.
i64 evaluate_twct(const Instance& ins, const Schedule& s);           // sum w_j C_j
i64 evaluate_lmax(const Instance& ins, const Schedule& s);           // max (C_j - d_j)
i64 evaluate_num_late(const Instance& ins, const Schedule& s);       // #{j : C_j > d_j}
i64 evaluate_weighted_late(const Instance& ins, const Schedule& s);  // sum w_j [C_j > d_j]

// ---------------------------------------------------------------------------
// Regular (nondecreasing) per-job cost functions for the min-max solver

// Named families expressible in the instance file.
struct PhiSpec {
  enum class Family { None, Lateness, WeightedTardiness, Affine };
  Family family = Family::None;
  // Affine only: one (a, b) pair per job, phi_j(t) = a*t + b.
  std::vector<std::pair<i64, i64>> affine;
};

// A set of per-job cost functions phi_j, each nondecreasing in t.  Values and
// arguments are exact integers; callers with fractional coefficients are
// expected to scale them to a common integer grid first.
class RegularFunctionSet {
 public:
  using Fn = std::function<i64(i64)>;

  RegularFunctionSet(int n, std::vector<Fn> fns);

  int n() const { return static_cast<int>(fns_.size()); }
  i64 eval(int job, i64 t) const { return fns_[static_cast<size_t>(job) - 1](t); }

  // Spot-checks monotonicity of every phi_j on [0, t_max] with a fixed
  // deterministic sample; throws InvalidInput on a detected decrease.
  void check_monotone(i64 t_max) const;

  static RegularFunctionSet lateness(const Instance& ins);            // t - d_j
  static RegularFunctionSet weighted_tardiness(const Instance& ins);  // w_j*max(0, t-d_j)
  static RegularFunctionSet affine(const Instance& ins,
                                   std::vector<std::pair<i64, i64>> coeff);
  static RegularFunctionSet from_spec(const Instance& ins, const PhiSpec& spec);

 private:
  std::vector<Fn> fns_;
};

// max_j phi_j(C_j(s)); with phi_j(t) = t - d_j this equals evaluate_lmax.
i64 evaluate_phimax(const Instance& ins, const RegularFunctionSet& phi,
                    const Schedule& s);

// ---------------------------------------------------------------------------
// Instance text format
//
//   # comment lines and trailing '#' comments are ignored
//   n S
//   p w d          (n lines, one per job in sigma0 order)
//   omega i1 i2 ...              (optional: movable jobs; default all)
//   phi lateness                 (optional: cost family for phimax)
//   phi weighted-tardiness
//   phi affine a1,b1 ... an,bn   (one a,b pair per job)

struct ParsedInstance {
  Instance instance;
  PhiSpec phi;  // Family::None when the file has no phi line
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& ins,
                    const PhiSpec& phi = {});

}  // namespace lifo

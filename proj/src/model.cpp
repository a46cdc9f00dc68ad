#include "lifo/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace lifo {

namespace {

// Keeping the per-instance totals inside 32 bits makes every product the
// solvers form (P*W, w*P, values summed over n jobs) fit comfortably in i64.
constexpr i64 kMaxTotal = std::numeric_limits<std::int32_t>::max();

}  // namespace

const char* to_string(Objective obj) {
  switch (obj) {
    case Objective::Twct: return "twct";
    case Objective::Lmax: return "lmax";
    case Objective::Phimax: return "phimax";
    case Objective::NumLate: return "numlate";
    case Objective::WeightedLate: return "wlate";
  }
  return "?";
}

std::optional<Objective> objective_from_string(const std::string& name) {
  if (name == "twct") return Objective::Twct;
  if (name == "lmax") return Objective::Lmax;
  if (name == "phimax") return Objective::Phimax;
  if (name == "numlate") return Objective::NumLate;
  if (name == "wlate") return Objective::WeightedLate;
  return std::nullopt;
}

Instance::Instance(std::vector<Job> jobs, int stack_capacity,
                   std::vector<bool> movable)
    : jobs_(std::move(jobs)), stack_(stack_capacity), movable_(std::move(movable)) {
  const size_t n = jobs_.size();
  if (n == 0) throw InvalidInput("instance needs at least one job");
  if (stack_ < 1) throw InvalidInput("stack capacity must be >= 1");
  if (movable_.empty()) movable_.assign(n, true);
  if (movable_.size() != n)
    throw InvalidInput("movable flags must match the number of jobs");
  all_movable_ = std::all_of(movable_.begin(), movable_.end(), [](bool b) { return b; });

  prefix_p_.assign(n + 1, 0);
  prefix_w_.assign(n + 1, 0);
  for (size_t k = 0; k < n; ++k) {
    Job& j = jobs_[k];
    j.id = static_cast<int>(k) + 1;
    if (j.p < 0 || j.w < 0 || j.d < 0)
      throw InvalidInput("job parameters must be nonnegative");
    if (j.d > kMaxTotal) throw InvalidInput("due date too large");
    prefix_p_[k + 1] = prefix_p_[k] + j.p;
    prefix_w_[k + 1] = prefix_w_[k] + j.w;
  }
  if (prefix_p_[n] > kMaxTotal) throw InvalidInput("total processing time too large");
  if (prefix_w_[n] > kMaxTotal) throw InvalidInput("total weight too large");
}

std::vector<int> Instance::movable_ids() const {
  std::vector<int> ids;
  for (int i = 1; i <= n(); ++i)
    if (movable(i)) ids.push_back(i);
  return ids;
}

Instance Instance::with_stack_capacity(int stack_capacity) const {
  return Instance(jobs_, stack_capacity, movable_);
}

Instance Instance::with_movable(std::vector<bool> movable) const {
  return Instance(jobs_, stack_, std::move(movable));
}

// ---------------------------------------------------------------------------
// Schedules

namespace {

void check_permutation(const Instance& ins, const std::vector<int>& order) {
  const int n = ins.n();
  if (static_cast<int>(order.size()) != n)
    throw InvalidInput("schedule must contain exactly n jobs");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int id : order) {
    if (id < 1 || id > n || seen[static_cast<size_t>(id)])
      throw InvalidInput("schedule is not a permutation of 1..n");
    seen[static_cast<size_t>(id)] = true;
  }
}

}  // namespace

Schedule make_schedule(const Instance& ins, std::vector<int> order) {
  check_permutation(ins, order);
  Schedule s;
  s.order = std::move(order);
  s.completion.assign(static_cast<size_t>(ins.n()) + 1, 0);
  s.lateness.assign(static_cast<size_t>(ins.n()) + 1, 0);
  i64 t = 0;
  for (int id : s.order) {
    t += ins.job(id).p;
    s.completion[static_cast<size_t>(id)] = t;
    s.lateness[static_cast<size_t>(id)] = t - ins.job(id).d;
  }
  return s;
}

i64 evaluate_twct(const Instance& ins, const Schedule& s) {
  check_permutation(ins, s.order);
  i64 t = 0, total = 0;
  for (int id : s.order) {
    t += ins.job(id).p;
    total += ins.job(id).w * t;
  }
  return total;
}

i64 evaluate_lmax(const Instance& ins, const Schedule& s) {
  check_permutation(ins, s.order);
  i64 t = 0, best = std::numeric_limits<i64>::min();
  for (int id : s.order) {
    t += ins.job(id).p;
    best = std::max(best, t - ins.job(id).d);
  }
  return best;
}

i64 evaluate_num_late(const Instance& ins, const Schedule& s) {
  check_permutation(ins, s.order);
  i64 t = 0, late = 0;
  for (int id : s.order) {
    t += ins.job(id).p;
    if (t > ins.job(id).d) ++late;
  }
  return late;
}

i64 evaluate_weighted_late(const Instance& ins, const Schedule& s) {
  check_permutation(ins, s.order);
  i64 t = 0, late = 0;
  for (int id : s.order) {
    t += ins.job(id).p;
    if (t > ins.job(id).d) late += ins.job(id).w;
  }
  return late;
}

// ---------------------------------------------------------------------------
// Regular function sets

RegularFunctionSet::RegularFunctionSet(int n, std::vector<Fn> fns) : fns_(std::move(fns)) {
  if (static_cast<int>(fns_.size()) != n)
    throw InvalidInput("need exactly one cost function per job");
}

void RegularFunctionSet::check_monotone(i64 t_max) const {
  // Deterministic spot check: endpoints plus a fixed pseudo-random sample.
  // Cheap, and catches the common mistakes (negative slope, unscaled
  // fractional coefficients).
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<i64> ts{0, t_max};
  for (int k = 0; k < 32; ++k)
    ts.push_back(t_max <= 0 ? 0 : static_cast<i64>(next() % static_cast<std::uint64_t>(t_max + 1)));
  std::sort(ts.begin(), ts.end());
  for (int j = 1; j <= n(); ++j) {
    i64 prev = eval(j, ts[0]);
    for (size_t k = 1; k < ts.size(); ++k) {
      i64 v = eval(j, ts[k]);
      if (v < prev)
        throw InvalidInput("cost function for job " + std::to_string(j) +
                           " decreases before t=" + std::to_string(ts[k]));
      prev = v;
    }
  }
}

RegularFunctionSet RegularFunctionSet::lateness(const Instance& ins) {
  std::vector<Fn> fns;
  for (int j = 1; j <= ins.n(); ++j)
    fns.push_back([d = ins.job(j).d](i64 t) { return t - d; });
  return RegularFunctionSet(ins.n(), std::move(fns));
}

RegularFunctionSet RegularFunctionSet::weighted_tardiness(const Instance& ins) {
  std::vector<Fn> fns;
  for (int j = 1; j <= ins.n(); ++j)
    fns.push_back([d = ins.job(j).d, w = ins.job(j).w](i64 t) {
      return t > d ? w * (t - d) : 0;
    });
  return RegularFunctionSet(ins.n(), std::move(fns));
}

RegularFunctionSet RegularFunctionSet::affine(const Instance& ins,
                                              std::vector<std::pair<i64, i64>> coeff) {
  if (static_cast<int>(coeff.size()) != ins.n())
    throw InvalidInput("affine phi needs one a,b pair per job");
  std::vector<Fn> fns;
  for (auto& [a, b] : coeff) {
    if (a < 0) throw InvalidInput("affine phi must have nonnegative slope");
    fns.push_back([a = a, b = b](i64 t) { return a * t + b; });
  }
  return RegularFunctionSet(ins.n(), std::move(fns));
}

RegularFunctionSet RegularFunctionSet::from_spec(const Instance& ins, const PhiSpec& spec) {
  switch (spec.family) {
    case PhiSpec::Family::WeightedTardiness: return weighted_tardiness(ins);
    case PhiSpec::Family::Affine: return affine(ins, spec.affine);
    case PhiSpec::Family::Lateness:
    case PhiSpec::Family::None: return lateness(ins);
  }
  return lateness(ins);
}

i64 evaluate_phimax(const Instance& ins, const RegularFunctionSet& phi,
                    const Schedule& s) {
  check_permutation(ins, s.order);
  if (phi.n() != ins.n()) throw InvalidInput("phi set does not match instance size");
  i64 t = 0, best = std::numeric_limits<i64>::min();
  for (int id : s.order) {
    t += ins.job(id).p;
    best = std::max(best, phi.eval(id, t));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

// Strips '#' comments and returns the remaining whitespace tokens.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::vector<std::string> toks;
  std::istringstream is(body);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

i64 parse_int(const std::string& tok, const char* what) {
  size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("expected an integer for ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size())
    throw InvalidInput(std::string("expected an integer for ") + what + ", got '" + tok + "'");
  return v;
}

}  // namespace

ParsedInstance parse_instance(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    auto toks = tokenize(raw);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw InvalidInput("empty instance file");

  size_t at = 0;
  if (lines[0].size() != 2) throw InvalidInput("header must be 'n S'");
  i64 n = parse_int(lines[0][0], "n");
  i64 stack = parse_int(lines[0][1], "S");
  if (n < 1 || n > 1000000) throw InvalidInput("job count out of range");
  ++at;

  std::vector<Job> jobs;
  for (i64 k = 0; k < n; ++k, ++at) {
    if (at >= lines.size() || lines[at].size() != 3)
      throw InvalidInput("expected n lines of 'p w d'");
    Job j;
    j.p = parse_int(lines[at][0], "p");
    j.w = parse_int(lines[at][1], "w");
    j.d = parse_int(lines[at][2], "d");
    jobs.push_back(j);
  }

  std::vector<bool> movable;
  PhiSpec phi;
  for (; at < lines.size(); ++at) {
    const auto& toks = lines[at];
    if (toks[0] == "omega") {
      movable.assign(static_cast<size_t>(n), false);
      for (size_t k = 1; k < toks.size(); ++k) {
        i64 id = parse_int(toks[k], "omega job id");
        if (id < 1 || id > n) throw InvalidInput("omega job id out of range");
        movable[static_cast<size_t>(id) - 1] = true;
      }
    } else if (toks[0] == "phi") {
      if (toks.size() < 2) throw InvalidInput("phi line needs a family name");
      if (toks[1] == "lateness") {
        phi.family = PhiSpec::Family::Lateness;
      } else if (toks[1] == "weighted-tardiness") {
        phi.family = PhiSpec::Family::WeightedTardiness;
      } else if (toks[1] == "affine") {
        phi.family = PhiSpec::Family::Affine;
        if (toks.size() != static_cast<size_t>(n) + 2)
          throw InvalidInput("phi affine needs one a,b pair per job");
        for (i64 k = 0; k < n; ++k) {
          const std::string& pair = toks[static_cast<size_t>(k) + 2];
          size_t comma = pair.find(',');
          if (comma == std::string::npos)
            throw InvalidInput("phi affine pairs must look like a,b");
          phi.affine.emplace_back(parse_int(pair.substr(0, comma), "phi a"),
                                  parse_int(pair.substr(comma + 1), "phi b"));
        }
      } else {
        throw InvalidInput("unknown phi family '" + toks[1] + "'");
      }
    } else {
      throw InvalidInput("unexpected line starting with '" + toks[0] + "'");
    }
  }

  if (stack < 1 || stack > 1000000) throw InvalidInput("stack capacity out of range");
  return ParsedInstance{Instance(std::move(jobs), static_cast<int>(stack), std::move(movable)),
                        std::move(phi)};
}

ParsedInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& ins, const PhiSpec& phi) {
  out << ins.n() << ' ' << ins.stack_capacity() << '\n';
  for (int j = 1; j <= ins.n(); ++j)
    out << ins.job(j).p << ' ' << ins.job(j).w << ' ' << ins.job(j).d << '\n';
  if (!ins.all_movable()) {
    out << "omega";
    for (int id : ins.movable_ids()) out << ' ' << id;
    out << '\n';
  }
  switch (phi.family) {
    case PhiSpec::Family::None: break;
    case PhiSpec::Family::Lateness: out << "phi lateness\n"; break;
    case PhiSpec::Family::WeightedTardiness: out << "phi weighted-tardiness\n"; break;
    case PhiSpec::Family::Affine: {
      out << "phi affine";
      for (auto& [a, b] : phi.affine) out << ' ' << a << ',' << b;
      out << '\n';
      break;
    }
  }
}

}  // namespace lifo

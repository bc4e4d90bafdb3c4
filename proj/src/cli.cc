// Copyright 2026 The gf2learn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf2learn/cli.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gf2learn/bounds.h"
#include "gf2learn/learner.h"
#include "gf2learn/poly_json.h"
#include "gf2learn/tester.h"
#include "json.hpp"

namespace gf2learn::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kSchema = "v1";
constexpr std::size_t kMaxTruthTableArity = 24;
constexpr std::uint64_t kDistanceSamples = 100000;

// Invalid configuration or I/O failure.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algo {
  kExactLowDeg,
  kReducedVars,
  kPositiveExamples,
  kMain,
  kSmallBeta,
  kAuto,
};

const std::vector<std::pair<std::string, Algo>>& algo_names() {
  static const std::vector<std::pair<std::string, Algo>> kNames = {
      {"exact-lowdeg", Algo::kExactLowDeg},
      {"reduced-vars", Algo::kReducedVars},
      {"positive-examples", Algo::kPositiveExamples},
      {"main", Algo::kMain},
      {"small-beta", Algo::kSmallBeta},
      {"auto", Algo::kAuto},
  };
  return kNames;
}

Algo parse_algo(const std::string& name) {
  for (const auto& [key, value] : algo_names()) {
    if (key == name) return value;
  }
  throw ConfigError("unknown algorithm '" + name + "'");
}

bool is_exact(Algo a) {
  return a == Algo::kExactLowDeg || a == Algo::kReducedVars;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json error_object(const std::string& message) {
  return {{"schema", kSchema}, {"type", "error"}, {"message", message}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

SparsePoly load_target(const std::string& path) {
  try {
    return poly_from_json_string(read_file(path));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("bad target '" + path + "': " + e.what());
  }
}

// Uniform-distribution distance, exact when the XOR is small enough and
// otherwise estimated locally (no oracle queries) from a fixed seed.
double target_distance(const SparsePoly& target, const SparsePoly& h,
                       std::uint64_t seed) {
  try {
    return distance_exact(target, h);
  } catch (const std::invalid_argument&) {
  }
  const SparsePoly diff = target + h;
  Rng rng(trial_seed(seed, 0x5eed));
  const ProductSampler uniform(diff.arity(), 0.5);
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < kDistanceSamples; ++i) {
    if (diff.evaluate(uniform.draw(rng))) ++ones;
  }
  return static_cast<double>(ones) / kDistanceSamples;
}

struct LearnConfig {
  Algo algorithm = Algo::kAuto;
  std::string algorithm_name = "auto";
  std::size_t s = 0;
  std::size_t d = 0;
  double epsilon = 0.1;
  double delta = 0.1;
  std::optional<std::uint64_t> budget;
  std::optional<double> eta;
  std::ostream* trace = nullptr;
};

struct TrialResult {
  json record;
  bool success = false;
  bool budget_exhausted = false;
  std::uint64_t queries = 0;
  double predicted = 0;
};

TrialResult run_learn_trial(const SparsePoly& target, const LearnConfig& cfg,
                            std::uint64_t trial, std::uint64_t seed) {
  const auto start = Clock::now();
  const std::size_t n = target.arity();
  QueryOracle oracle = oracle_from_poly(target);
  oracle.set_trace(cfg.trace);
  Rng rng(seed);

  LearnReport report;
  report.algorithm = cfg.algorithm_name;
  std::string note;
  LearnParams params;
  params.s = cfg.s;
  params.epsilon = cfg.epsilon;
  params.delta = cfg.delta;
  params.n = n;
  params.budget = cfg.budget;
  params.seed = seed;
  params.eta = cfg.eta;

  if (cfg.algorithm == Algo::kMain || cfg.algorithm == Algo::kSmallBeta ||
      cfg.algorithm == Algo::kAuto) {
    if (cfg.algorithm == Algo::kMain) {
      report = learn_sparse_main(oracle, params);
    } else if (cfg.algorithm == Algo::kSmallBeta) {
      report = learn_small_beta(oracle, params);
    } else {
      report = learn_auto(oracle, params);
      report.algorithm = "auto/" + report.algorithm;
    }
  } else {
    if (cfg.budget) oracle.set_budget(*cfg.budget);
    switch (cfg.algorithm) {
      case Algo::kExactLowDeg:
        report.predicted_bound = static_cast<double>(
            exact_low_degree_ceiling(n, cfg.d, cfg.s, cfg.delta));
        break;
      case Algo::kReducedVars:
        report.predicted_bound = static_cast<double>(
            reduced_vars_ceiling(n, cfg.d, cfg.s, cfg.delta));
        break;
      default:
        report.predicted_bound = static_cast<double>(
            positive_examples_ceiling(n, cfg.s, cfg.epsilon));
        break;
    }
    report.hypothesis = SparsePoly(n);
    report.outcome = is_exact(cfg.algorithm) ? Outcome::kExact
                                             : Outcome::kApprox;
    try {
      if (cfg.algorithm == Algo::kExactLowDeg) {
        report.hypothesis =
            learn_exact_low_degree(oracle, cfg.d, cfg.s, cfg.delta, rng);
      } else if (cfg.algorithm == Algo::kReducedVars) {
        report.hypothesis =
            learn_reduced_vars(oracle, cfg.d, cfg.s, cfg.delta, rng);
      } else {
        report.hypothesis =
            learn_poly_positive_examples(oracle, cfg.s, cfg.epsilon, rng);
      }
      if (report.hypothesis.is_zero()) report.outcome = Outcome::kDeclaredZero;
    } catch (const BudgetExhausted&) {
      report.outcome = Outcome::kGaveUpBudget;
    } catch (const PromiseViolation& e) {
      note = e.what();
    }
    report.queries_used = oracle.queries();
  }

  TrialResult r;
  r.queries = report.queries_used;
  r.predicted = report.predicted_bound;
  r.budget_exhausted = report.outcome == Outcome::kGaveUpBudget;
  const double distance = target_distance(target, report.hypothesis, seed);
  if (is_exact(cfg.algorithm)) {
    r.success = note.empty() && !r.budget_exhausted &&
                report.hypothesis == target;
  } else {
    r.success = !r.budget_exhausted && distance <= cfg.epsilon;
  }
  r.record = {
      {"schema", kSchema},
      {"type", "trial"},
      {"command", "learn"},
      {"trial", trial},
      {"seed", seed},
      {"algorithm", report.algorithm},
      {"queries", report.queries_used},
      {"predicted", report.predicted_bound},
      {"ratio", report.predicted_bound > 0
                    ? static_cast<double>(report.queries_used) /
                          report.predicted_bound
                    : 0.0},
      {"outcome", to_string(report.outcome)},
      {"success", r.success},
      {"distance", distance},
      {"hypothesis", poly_to_json(report.hypothesis)},
      {"metadata", {{"elapsed_seconds", seconds_since(start)}}},
  };
  if (!note.empty()) r.record["note"] = note;
  return r;
}

struct Aggregate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t budget_exhausted = 0;
  double total_queries = 0;
  std::uint64_t max_queries = 0;
  double total_ratio = 0;

  void add(const TrialResult& r) {
    ++trials;
    successes += r.success ? 1 : 0;
    budget_exhausted += r.budget_exhausted ? 1 : 0;
    total_queries += static_cast<double>(r.queries);
    max_queries = std::max(max_queries, r.queries);
    total_ratio += r.predicted > 0 ? static_cast<double>(r.queries) / r.predicted
                                   : 0.0;
  }
  double success_rate() const {
    return trials ? static_cast<double>(successes) / trials : 0.0;
  }
  double mean_queries() const { return trials ? total_queries / trials : 0.0; }
  double mean_ratio() const { return trials ? total_ratio / trials : 0.0; }
};

void fill_learn_defaults(LearnConfig& cfg, const SparsePoly& target) {
  if (cfg.s == 0) cfg.s = std::max<std::size_t>(target.sparsity(), 1);
  if (cfg.d == 0) cfg.d = target.degree();
}

void check_unit_interval(double v, const char* name) {
  if (!(v > 0 && v < 1)) {
    throw ConfigError(std::string(name) + " must lie in (0,1)");
  }
}

// ---------------------------------------------------------------------------

int cmd_gen(std::size_t n, std::size_t d, std::size_t s, std::uint64_t seed,
            const std::string& out_path, std::ostream& out) {
  Rng rng(seed);
  SparsePoly p;
  try {
    p = random_sparse_poly(n, d, s, rng);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const std::string text = poly_to_json_string(p) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int cmd_learn(const std::string& target_path, LearnConfig cfg,
              std::uint64_t trials, std::uint64_t seed,
              const std::string& trace_path, std::ostream& out) {
  const auto start = Clock::now();
  const SparsePoly target = load_target(target_path);
  fill_learn_defaults(cfg, target);
  check_unit_interval(cfg.epsilon, "epsilon");
  check_unit_interval(cfg.delta, "delta");
  std::unique_ptr<std::ofstream> trace;
  if (!trace_path.empty()) {
    trace = std::make_unique<std::ofstream>(trace_path);
    if (!*trace) throw ConfigError("cannot open trace file '" + trace_path + "'");
    cfg.trace = trace.get();
  }
  Aggregate agg;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const TrialResult r = run_learn_trial(target, cfg, i, trial_seed(seed, i));
    out << r.record.dump() << '\n';
    agg.add(r);
  }
  const json aggregate = {
      {"schema", kSchema},
      {"type", "aggregate"},
      {"command", "learn"},
      {"algorithm", cfg.algorithm_name},
      {"trials", agg.trials},
      {"successes", agg.successes},
      {"success_rate", agg.success_rate()},
      {"budget_exhausted", agg.budget_exhausted},
      {"mean_queries", agg.mean_queries()},
      {"max_queries", agg.max_queries},
      {"mean_ratio", agg.mean_ratio()},
      {"metadata", {{"elapsed_seconds", seconds_since(start)}}},
  };
  out << aggregate.dump() << '\n';
  if (agg.trials > 0 && agg.budget_exhausted == agg.trials) {
    out << error_object("query budget exhausted in every trial").dump() << '\n';
    return 1;
  }
  return agg.successes > 0 ? 0 : 1;
}

// Oracle over a random truth table on n variables.
QueryOracle random_function_oracle(std::size_t n, std::uint64_t seed) {
  auto table = std::make_shared<std::vector<std::uint64_t>>(
      n <= 6 ? 1 : (std::size_t{1} << (n - 6)));
  Rng rng(seed);
  for (auto& w : *table) w = rng();
  return QueryOracle::from_function(n, [table, n](const PointView& x) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (x.bit(j)) index |= std::size_t{1} << j;
    }
    return ((*table)[index >> 6] >> (index & 63)) & 1;
  });
}

int cmd_test(const std::string& target_path, std::size_t random_n,
             std::size_t s, double epsilon, double budget_constant,
             std::uint64_t trials, std::uint64_t seed, std::ostream& out) {
  const auto start = Clock::now();
  check_unit_interval(epsilon, "epsilon");
  if (target_path.empty() == (random_n == 0)) {
    throw ConfigError("test needs exactly one of --target or --random-function");
  }
  if (random_n > kMaxTruthTableArity) {
    throw ConfigError("--random-function arity is limited to " +
                      std::to_string(kMaxTruthTableArity));
  }
  std::optional<SparsePoly> target;
  if (!target_path.empty()) target = load_target(target_path);
  if (s == 0) s = target ? std::max<std::size_t>(target->sparsity(), 1) : 1;
  TesterOptions options;
  options.budget_constant = budget_constant;

  std::uint64_t accepts = 0;
  std::uint64_t completed = 0;
  double total_queries = 0;
  std::uint64_t max_queries = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const auto trial_start = Clock::now();
    const std::uint64_t ts = trial_seed(seed, i);
    const QueryOracle oracle =
        target ? oracle_from_poly(*target)
               : random_function_oracle(random_n, trial_seed(ts, 0xf00d));
    const TestVerdict v = test_sparsity(oracle, s, epsilon, ts, nullptr, options);
    const bool done = v.reason != "learning budget exhausted";
    accepts += v.decision == Decision::kAccept ? 1 : 0;
    completed += done ? 1 : 0;
    total_queries += static_cast<double>(v.queries_used);
    max_queries = std::max(max_queries, v.queries_used);
    json record = {
        {"schema", kSchema},
        {"type", "trial"},
        {"command", "test"},
        {"trial", i},
        {"seed", ts},
        {"decision", to_string(v.decision)},
        {"queries", v.queries_used},
        {"budget", v.budget},
        {"reason", v.reason},
        {"metadata", {{"elapsed_seconds", seconds_since(trial_start)}}},
    };
    if (v.estimated_distance) record["estimated_distance"] = *v.estimated_distance;
    out << record.dump() << '\n';
  }
  const json aggregate = {
      {"schema", kSchema},
      {"type", "aggregate"},
      {"command", "test"},
      {"trials", trials},
      {"accepts", accepts},
      {"rejects", trials - accepts},
      {"accept_rate", trials ? static_cast<double>(accepts) / trials : 0.0},
      {"mean_queries", trials ? total_queries / trials : 0.0},
      {"max_queries", max_queries},
      {"metadata", {{"elapsed_seconds", seconds_since(start)}}},
  };
  out << aggregate.dump() << '\n';
  if (trials > 0 && completed == 0) {
    out << error_object("query budget exhausted in every trial").dump() << '\n';
    return 1;
  }
  return completed > 0 ? 0 : 1;
}

json bounds_json(double s, double epsilon, double n) {
  const bounds::BoundsProfile p = bounds::profile(s, epsilon, n);
  json j = {
      {"schema", kSchema},
      {"type", "bounds"},
      {"s", p.s},
      {"epsilon", p.epsilon},
      {"n", p.n},
      {"degenerate_beta", p.degenerate_beta},
      {"q_upper_main", p.q_upper_main},
      {"q_upper_small_beta", p.q_upper_small_beta},
      {"q_lower", p.q_lower},
      {"q_tester", p.q_tester},
      {"thresholds",
       {{"gamma_lt_1", p.threshold_gamma_lt_1},
        {"gamma_prime_eq_1", p.threshold_gamma_prime_eq_1},
        {"crossover", p.threshold_crossover}}},
      {"notes", p.notes},
  };
  if (p.degenerate_beta) {
    j["beta"] = nullptr;
    j["gamma"] = nullptr;
    j["gamma_prime"] = nullptr;
    j["optimal_eta"] = nullptr;
  } else {
    j["beta"] = p.beta;
    j["gamma"] = p.gamma;
    j["gamma_prime"] = p.gamma_prime;
    j["optimal_eta"] = p.optimal_eta;
  }
  return j;
}

int cmd_bench(std::size_t n, std::size_t d, const std::vector<std::size_t>& s_list,
              const std::vector<double>& eps_list,
              const std::vector<std::string>& algorithms, double delta,
              std::uint64_t trials, std::uint64_t seed,
              const std::string& out_path, std::ostream& out) {
  for (double e : eps_list) check_unit_interval(e, "epsilon");
  check_unit_interval(delta, "delta");
  std::vector<Algo> algos;
  for (const std::string& name : algorithms) algos.push_back(parse_algo(name));

  std::ostringstream csv;
  csv << std::setprecision(10);
  csv << "s,epsilon,beta,algorithm,trials,success_rate,mean_queries,predicted,"
         "ratio\n";
  std::uint64_t cell = 0;
  for (std::size_t s : s_list) {
    for (double epsilon : eps_list) {
      const std::uint64_t cell_seed = trial_seed(seed, cell++);
      std::vector<SparsePoly> targets;
      for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(trial_seed(cell_seed, t));
        try {
          targets.push_back(random_sparse_poly(n, d, s, rng));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      }
      for (std::size_t k = 0; k < algos.size(); ++k) {
        LearnConfig cfg;
        cfg.algorithm = algos[k];
        cfg.algorithm_name = algorithms[k];
        cfg.s = s;
        cfg.d = d;
        cfg.epsilon = epsilon;
        cfg.delta = delta;
        Aggregate agg;
        double total_predicted = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
          const TrialResult r = run_learn_trial(
              targets[t], cfg, t, trial_seed(cell_seed, t + trials));
          agg.add(r);
          total_predicted += r.predicted;
        }
        const double predicted = trials ? total_predicted / trials : 0.0;
        const double beta = bounds::beta_of(static_cast<double>(s), epsilon);
        csv << s << ',' << epsilon << ',';
        if (std::isnan(beta)) {
          csv << "nan";
        } else {
          csv << beta;
        }
        csv << ',' << algorithms[k] << ',' << trials << ','
            << agg.success_rate() << ',' << agg.mean_queries() << ','
            << predicted << ','
            << (predicted > 0 ? agg.mean_queries() / predicted : 0.0) << '\n';
      }
    }
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    write_file(out_path, csv.str());
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Learning and testing sparse GF(2) polynomials", "gf2learn"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::uint64_t trials = 1;

  // gen
  std::size_t gen_n = 16, gen_d = 4, gen_s = 8;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a random sparse polynomial");
  gen->add_option("--n", gen_n, "Number of variables")->capture_default_str();
  gen->add_option("--d", gen_d, "Maximum monomial degree")->capture_default_str();
  gen->add_option("--s", gen_s, "Number of monomials")->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (default: stdout)");

  // learn
  LearnConfig learn_cfg;
  std::string learn_target, trace_path, algo_name = "auto";
  std::uint64_t budget = 0;
  double eta = 0;
  auto* learn = app.add_subcommand("learn", "Learn a target polynomial");
  learn->add_option("--target", learn_target, "Target polynomial JSON")
      ->required();
  learn->add_option("--algorithm", algo_name,
                    "exact-lowdeg, reduced-vars, positive-examples, main, "
                    "small-beta or auto")
      ->capture_default_str();
  learn->add_option("--s", learn_cfg.s, "Sparsity bound (default: target's)");
  learn->add_option("--d", learn_cfg.d, "Degree bound (default: target's)");
  learn->add_option("--epsilon", learn_cfg.epsilon, "Accuracy")
      ->capture_default_str();
  learn->add_option("--delta", learn_cfg.delta, "Failure probability")
      ->capture_default_str();
  learn->add_option("--budget", budget, "Per-trial query budget (0: none)");
  learn->add_option("--eta", eta, "Restriction exponent of the main learner");
  learn->add_option("--trials", trials, "Number of trials")->capture_default_str();
  learn->add_option("--seed", seed, "Random seed")->capture_default_str();
  learn->add_option("--trace", trace_path, "Write one line per query here");

  // test
  std::string test_target;
  std::size_t test_random_n = 0, test_s = 0;
  double test_epsilon = 0.05, budget_constant = 10.0;
  auto* test = app.add_subcommand("test", "Test sparsity of a function");
  test->add_option("--target", test_target, "Target polynomial JSON");
  test->add_option("--random-function", test_random_n,
                   "Use a fresh random truth table on this many variables");
  test->add_option("--s", test_s, "Sparsity to test for");
  test->add_option("--epsilon", test_epsilon, "Distance parameter")
      ->capture_default_str();
  test->add_option("--budget-constant", budget_constant,
                   "Learning budget as a multiple of the learner's ceiling")
      ->capture_default_str();
  test->add_option("--trials", trials, "Number of trials")->capture_default_str();
  test->add_option("--seed", seed, "Random seed")->capture_default_str();

  // bounds
  double bounds_s = 8, bounds_epsilon = 1e-6, bounds_n = 65536;
  auto* bnd = app.add_subcommand("bounds", "Report query-complexity bounds");
  bnd->add_option("--s", bounds_s, "Sparsity")->capture_default_str();
  bnd->add_option("--epsilon", bounds_epsilon, "Accuracy")->capture_default_str();
  bnd->add_option("--n", bounds_n, "Number of variables")->capture_default_str();

  // bench
  std::size_t bench_n = 64, bench_d = 4;
  std::vector<std::size_t> bench_s = {2, 4};
  std::vector<double> bench_eps = {0.0625, 0.015625};
  std::vector<std::string> bench_algos = {"exact-lowdeg", "reduced-vars",
                                          "positive-examples", "small-beta"};
  double bench_delta = 0.1;
  std::uint64_t bench_trials = 5;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Sweep a grid of (s, epsilon)");
  bench->add_option("--n", bench_n, "Number of variables")->capture_default_str();
  bench->add_option("--d", bench_d, "Degree of the random targets")
      ->capture_default_str();
  bench->add_option("--s", bench_s, "Sparsities")->delimiter(',');
  bench->add_option("--epsilon", bench_eps, "Accuracies")->delimiter(',');
  bench->add_option("--algorithm", bench_algos, "Algorithms")->delimiter(',');
  bench->add_option("--delta", bench_delta, "Failure probability")
      ->capture_default_str();
  bench->add_option("--trials", bench_trials, "Trials per cell")
      ->capture_default_str();
  bench->add_option("--seed", seed, "Random seed")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV path (default: stdout)");

  std::vector<const char*> argv = {"gf2learn"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_object(e.what()).dump() << '\n';
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*gen) return cmd_gen(gen_n, gen_d, gen_s, seed, gen_out, out);
    if (*learn) {
      learn_cfg.algorithm = parse_algo(algo_name);
      learn_cfg.algorithm_name = algo_name;
      if (budget > 0) learn_cfg.budget = budget;
      if (learn->count("--eta") > 0) learn_cfg.eta = eta;
      return cmd_learn(learn_target, learn_cfg, trials, seed, trace_path, out);
    }
    if (*test) {
      return cmd_test(test_target, test_random_n, test_s, test_epsilon,
                      budget_constant, trials, seed, out);
    }
    if (*bnd) {
      if (!(bounds_s >= 1)) throw ConfigError("s must be at least 1");
      check_unit_interval(bounds_epsilon, "epsilon");
      if (!(bounds_n >= 1)) throw ConfigError("n must be at least 1");
      out << bounds_json(bounds_s, bounds_epsilon, bounds_n).dump() << '\n';
      return 0;
    }
    if (*bench) {
      return cmd_bench(bench_n, bench_d, bench_s, bench_eps, bench_algos,
                       bench_delta, bench_trials, seed, bench_out, out);
    }
  } catch (const ConfigError& e) {
    out << error_object(e.what()).dump() << '\n';
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    out << error_object(e.what()).dump() << '\n';
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace gf2learn::cli

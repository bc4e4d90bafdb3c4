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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gf2learn/bounds.h"
#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

using internal::ceil_log2;
using internal::ceil_u64;
using internal::sat_add;
using internal::sat_mul;

double LearnParams::beta() const { return bounds::beta_of(s, epsilon); }

void LearnParams::validate() const {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  if (!(epsilon > 0 && epsilon < 1)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  if (!(delta > 0 && delta < 1)) {
    throw std::invalid_argument("delta must lie in (0,1)");
  }
  if (eta && !(*eta > 0 && *eta <= 1)) {
    throw std::invalid_argument("eta must lie in (0,1]");
  }
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kExact:
      return "exact";
    case Outcome::kApprox:
      return "approx";
    case Outcome::kGaveUpBudget:
      return "gave-up-budget";
    case Outcome::kDeclaredZero:
      return "declared-zero";
  }
  return "unknown";
}

namespace internal {

BudgetGuard::BudgetGuard(const QueryOracle& f,
                         std::optional<std::uint64_t> extra)
    : oracle_(f), saved_(f.budget()) {
  if (!extra) return;
  const std::uint64_t limit = sat_add(f.queries(), *extra);
  if (!saved_ || limit < *saved_) oracle_.set_budget(limit);
}

BudgetGuard::~BudgetGuard() { oracle_.set_budget(saved_); }

SparsePoly learn_constant(const QueryOracle& f, QueryAudit* audit) {
  AuditScope scope(audit, QueryKind::kConstantProbe, 1);
  const bool value = f.query(Assignment::zeros(f.arity()));
  scope.tick();
  return value ? SparsePoly::one(f.arity()) : SparsePoly::zero(f.arity());
}

double estimate_disagreement(const QueryOracle& f, const SparsePoly& h,
                             std::uint64_t samples, Rng& rng,
                             QueryAudit* audit, QueryKind kind) {
  if (samples == 0) return 0.0;
  const ProductSampler uniform(f.arity(), 0.5);
  AuditScope scope(audit, kind, samples);
  std::uint64_t disagreements = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto x = uniform.draw(rng);
    const bool value = f.query(x);
    scope.tick();
    if (value != h.evaluate(x)) ++disagreements;
  }
  return static_cast<double>(disagreements) / static_cast<double>(samples);
}

Var locate_bucket_variable(const QueryOracle& f, const VariableHash& phi,
                           std::size_t i, const Assignment& a,
                           std::optional<bool> value_at_a,
                           const Assignment* alive,
                           const KnownVariables* known, QueryAudit* audit,
                           std::size_t* searched) {
  std::vector<Var> candidates;
  std::vector<Var> known_here;
  for (Var j : phi.bucket(i)) {
    if (alive != nullptr && !(*alive)[j]) continue;
    if (known != nullptr && known->count(j) != 0) known_here.push_back(j);
    candidates.push_back(j);
  }
  const QueryOracle g = pin_bucket(f, phi, i, a);

  // A single previously located candidate is checked directly: the pinned
  // function is a literal, so it flips at e_k iff k is the variable.
  if (known_here.size() == 1 && value_at_a) {
    const Var k = known_here.front();
    AuditScope scope(audit, QueryKind::kKnownProbe, 1);
    Assignment e(f.arity());
    e.set(k);
    const bool flipped = g.query(e) != *value_at_a;
    scope.tick();
    if (searched != nullptr) *searched = 1;
    if (flipped) return k;
    candidates.erase(std::find(candidates.begin(), candidates.end(), k));
  }

  if (searched != nullptr) *searched = candidates.size();
  const Literal lit = identify_literal(g, candidates, audit);
  if (!lit.var) {
    throw PromiseViolation("bucket " + std::to_string(i) +
                           " pins to a constant");
  }
  const bool at_zero = lit.kind == Literal::Kind::kNegative;
  if (value_at_a && *value_at_a != at_zero) {
    throw PromiseViolation("bucket " + std::to_string(i) +
                           " disagrees with the learned function");
  }
  return *lit.var;
}

LearnReport run_boosted(const QueryOracle& f, const LearnParams& params,
                        const std::string& algorithm, double predicted,
                        QueryAudit* audit, const CandidateFn& candidate) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t q0 = f.queries();
  BudgetGuard guard(f, params.budget);
  Rng rng(params.seed);

  const std::uint64_t runs = boost_repetitions(params.delta);
  const std::uint64_t samples = validation_samples(params.epsilon, params.delta);
  LearnReport report;
  report.algorithm = algorithm;
  report.predicted_bound = predicted;

  SparsePoly best(f.arity());
  bool have_best = false;
  double best_error = std::numeric_limits<double>::infinity();
  SparsePoly current(f.arity());
  try {
    for (std::uint64_t r = 0; r < runs; ++r) {
      current = SparsePoly(f.arity());
      candidate(current, rng);
      if (runs == 1) {
        best = current;
        have_best = true;
        break;
      }
      const double error = estimate_disagreement(f, current, samples, rng,
                                                 audit, QueryKind::kValidation);
      if (error < best_error) {
        best = current;
        best_error = error;
        have_best = true;
      }
      if (error <= 2 * params.epsilon) break;
    }
    report.hypothesis = best;
    report.outcome =
        best.is_zero() ? Outcome::kDeclaredZero : Outcome::kApprox;
  } catch (const BudgetExhausted&) {
    report.hypothesis = have_best ? best : current;
    report.outcome = Outcome::kGaveUpBudget;
  }
  report.queries_used = f.queries() - q0;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Schedules.

MainSchedule main_schedule(const LearnParams& params) {
  params.validate();
  const double s = static_cast<double>(params.s);
  // The restriction exponent needs log2 s > 0; s = 1 is scheduled as s = 2.
  const double s_eff = std::max(s, 2.0);
  const double beta = bounds::beta_of(s_eff, params.epsilon);
  MainSchedule m;
  m.eta = params.eta ? *params.eta : bounds::optimal_eta(beta);
  const double log_inv_p = m.eta / (beta + 1.0);
  m.p = std::exp2(-log_inv_p);
  const double ratio = s / params.epsilon;
  m.size_limit = std::log2(ratio);
  m.degree = static_cast<std::size_t>(
      std::ceil(std::log2(ratio) +
                (std::log2(s_eff) + std::log2(std::log2(s_eff)) + 6.0) /
                    log_inv_p));
  m.projections =
      ceil_u64(std::pow(ratio, log_inv_p) * std::log(16.0 * s));
  return m;
}

PositiveSchedule positive_schedule(std::size_t s_in, double epsilon) {
  if (!(epsilon > 0 && epsilon < 1) || s_in < 1) {
    throw std::invalid_argument("positive_schedule needs s >= 1, eps in (0,1)");
  }
  const double s = static_cast<double>(s_in);
  PositiveSchedule p;
  p.inner_draws = ceil_u64(8.0 / (7.0 * epsilon) * std::log(128.0 * s));
  p.max_find_calls = ceil_u64(64.0 * s * std::log(128.0 * s));
  p.degree = static_cast<std::size_t>(std::ceil(std::log2(s / epsilon))) + 3;
  p.delta = 1.0 / (128.0 * s);
  p.weight_limit = std::log2(s / epsilon) + 3.0;
  return p;
}

SmallBetaSchedule small_beta_schedule(std::size_t s_in, double epsilon) {
  if (!(epsilon > 0 && epsilon < 1) || s_in < 1) {
    throw std::invalid_argument("small_beta_schedule needs s >= 1, eps in (0,1)");
  }
  const double s = static_cast<double>(s_in);
  const double level = 64.0 * s * std::log2(2.0 * s / epsilon);
  SmallBetaSchedule b;
  b.keep = 1.0 - 1.0 / level;
  b.degree = level * std::log(64.0 * s);
  b.buckets = 16.0 * (b.degree * s) * (b.degree * s);
  b.recovery_degree =
      static_cast<std::size_t>(std::ceil(std::log2(2.0 * s / epsilon))) + 3;
  return b;
}

std::uint64_t boost_repetitions(double delta) {
  if (delta >= 1.0 / 3.0) return 1;
  return std::max<std::uint64_t>(
      1, ceil_u64(std::log(1.0 / delta) / std::log(3.0)));
}

std::uint64_t validation_samples(double epsilon, double delta) {
  const double runs = static_cast<double>(boost_repetitions(delta));
  return ceil_u64(3.0 / epsilon * std::log(2.0 * runs / delta));
}

// ---------------------------------------------------------------------------
// Worst-case ceilings.

std::uint64_t find_monomial_ceiling(std::size_t d, std::size_t m,
                                    std::size_t s, double delta) {
  if (d == 0) return 0;
  return sat_mul(find_monomial_rounds(d, m, delta),
                 test_equal_repetitions(s, d, 0.5));
}

std::uint64_t exact_low_degree_ceiling(std::size_t m, std::size_t d,
                                       std::size_t s, double delta) {
  if (d == 0) return 1;
  const std::size_t s2 = 2 * std::max<std::size_t>(s, 1);
  const double step = delta / static_cast<double>(s2);
  return sat_add(sat_mul(s + 1, test_equal_repetitions(s2, d, step)),
                 sat_mul(s, find_monomial_ceiling(d, m, s2, step)));
}

std::uint64_t reduced_vars_ceiling(std::size_t n, std::size_t d,
                                   std::size_t s, double delta,
                                   int max_attempts) {
  if (d == 0) return 1;
  const double nominal = std::pow(2.0 * d * s, 2.0);
  const std::size_t m = nominal > static_cast<double>(n)
                            ? n
                            : static_cast<std::size_t>(nominal);
  const std::uint64_t learn =
      exact_low_degree_ceiling(m, d, s, std::min(delta, 1.0 / 16.0));
  // Per located variable: one known-variable probe plus the literal search.
  const std::uint64_t locate =
      sat_mul(static_cast<std::uint64_t>(d) * s, ceil_log2(n) + 3);
  return sat_mul(static_cast<std::uint64_t>(std::max(max_attempts, 1)),
                 sat_add(learn, locate));
}

std::uint64_t positive_examples_ceiling(std::size_t m, std::size_t s,
                                        double epsilon) {
  const PositiveSchedule p = positive_schedule(s, epsilon);
  const std::uint64_t find =
      find_monomial_ceiling(p.degree, m, 2 * s, p.delta);
  return sat_add(sat_mul(s, p.inner_draws),
                 sat_mul(sat_add(p.max_find_calls, s), find));
}

namespace {

std::uint64_t boosted(const LearnParams& params, std::uint64_t per_run) {
  const std::uint64_t runs = boost_repetitions(params.delta);
  const std::uint64_t validation =
      runs > 1 ? validation_samples(params.epsilon, params.delta) : 0;
  return sat_mul(runs, sat_add(per_run, validation));
}

}  // namespace

std::uint64_t sparse_main_ceiling(const LearnParams& params) {
  const MainSchedule m = main_schedule(params);
  const double step = 1.0 / (16.0 * static_cast<double>(m.projections));
  return boosted(params, sat_mul(m.projections,
                                 reduced_vars_ceiling(params.n, m.degree,
                                                      params.s, step)));
}

std::uint64_t small_beta_ceiling(const LearnParams& params) {
  params.validate();
  const SmallBetaSchedule b = small_beta_schedule(params.s, params.epsilon);
  const std::size_t m = b.buckets > static_cast<double>(params.n)
                            ? params.n
                            : static_cast<std::size_t>(b.buckets);
  const PositiveSchedule p = positive_schedule(params.s, params.epsilon / 2);
  const std::uint64_t learn =
      positive_examples_ceiling(m, params.s, params.epsilon / 2);
  const std::uint64_t variables =
      static_cast<std::uint64_t>(params.s) *
      static_cast<std::uint64_t>(std::floor(p.weight_limit));
  const std::uint64_t per_variable = sat_add(
      sat_mul(2, test_equal_repetitions(params.s, b.recovery_degree,
                                        1.0 / (32.0 * std::max<std::size_t>(m, 1)))),
      ceil_log2(params.n) + 2);
  return boosted(params, sat_add(learn, sat_mul(variables, per_variable)));
}

std::uint64_t auto_ceiling(const LearnParams& params) {
  return choose_branch(params.s, params.epsilon) == Branch::kSmallBeta
             ? small_beta_ceiling(params)
             : sparse_main_ceiling(params);
}

Branch choose_branch(std::size_t s, double epsilon) {
  if (s < 2) return Branch::kMain;
  const double beta = bounds::beta_of(static_cast<double>(s), epsilon);
  return bounds::gamma_prime(beta) < bounds::gamma(beta).value
             ? Branch::kSmallBeta
             : Branch::kMain;
}

LearnReport learn_auto(const QueryOracle& f, const LearnParams& params,
                       QueryAudit* audit) {
  return choose_branch(params.s, params.epsilon) == Branch::kSmallBeta
             ? learn_small_beta(f, params, audit)
             : learn_sparse_main(f, params, audit);
}

}  // namespace gf2learn

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

#include "gf2learn/tester.h"

#include <cmath>
#include <stdexcept>

#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {
namespace {

LearnParams learning_params(std::size_t n, std::size_t s, double epsilon,
                            std::uint64_t seed) {
  LearnParams p;
  p.s = s;
  p.epsilon = epsilon / 4;
  p.delta = 0.1;
  p.n = n;
  p.seed = seed;
  return p;
}

}  // namespace

const char* to_string(Decision d) {
  return d == Decision::kAccept ? "accept" : "reject";
}

std::uint64_t distance_samples(double epsilon) {
  return internal::ceil_u64(48.0 / epsilon * std::log(20.0));
}

std::uint64_t tester_budget(std::size_t n, std::size_t s, double epsilon,
                            const TesterOptions& options) {
  const std::uint64_t ceiling =
      auto_ceiling(learning_params(n, s, epsilon, 0));
  const double scaled = options.budget_constant * static_cast<double>(ceiling);
  return internal::ceil_u64(scaled);
}

TestVerdict test_sparsity(const QueryOracle& f, std::size_t s, double epsilon,
                          std::uint64_t seed, QueryAudit* audit,
                          const TesterOptions& options) {
  if (!(epsilon > 0 && epsilon < 1)) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  const std::uint64_t q0 = f.queries();
  TestVerdict verdict;
  verdict.budget = tester_budget(f.arity(), s, epsilon, options);
  LearnParams params = learning_params(f.arity(), s, epsilon, seed);
  params.budget = verdict.budget;

  LearnReport report;
  try {
    report = learn_auto(f, params, audit);
  } catch (const PromiseViolation& e) {
    verdict.reason = std::string("promise violation: ") + e.what();
    verdict.queries_used = f.queries() - q0;
    return verdict;
  }
  if (report.outcome == Outcome::kGaveUpBudget) {
    verdict.reason = "learning budget exhausted";
    verdict.queries_used = f.queries() - q0;
    return verdict;
  }
  if (report.hypothesis.sparsity() > s) {
    verdict.reason = "hypothesis exceeds the sparsity bound";
    verdict.queries_used = f.queries() - q0;
    return verdict;
  }

  Rng rng(trial_seed(seed, 1));
  const double distance = internal::estimate_disagreement(
      f, report.hypothesis, distance_samples(epsilon), rng, audit,
      QueryKind::kDistanceEstimate);
  verdict.hypothesis = report.hypothesis;
  verdict.estimated_distance = distance;
  verdict.decision =
      distance <= epsilon / 2 ? Decision::kAccept : Decision::kReject;
  verdict.reason = verdict.decision == Decision::kAccept
                       ? "hypothesis verified"
                       : "hypothesis disagrees beyond eps/2";
  verdict.queries_used = f.queries() - q0;
  return verdict;
}

}  // namespace gf2learn

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

#include <cmath>
#include <map>

#include "gf2learn/bounds.h"
#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

LearnReport learn_small_beta(const QueryOracle& f, const LearnParams& params,
                             QueryAudit* audit) {
  params.validate();
  const std::size_t n = f.arity();
  const std::size_t s = params.s;
  const SmallBetaSchedule sched = small_beta_schedule(s, params.epsilon);
  const double predicted =
      bounds::predicted_queries(s, params.epsilon, n,
                                bounds::Algorithm::kSmallBeta)
          .value;
  const auto buckets = static_cast<std::uint64_t>(std::ceil(sched.buckets));

  auto candidate = [&](SparsePoly& h, Rng& rng) {
    const Assignment keep = sample_product(n, sched.keep, rng);
    const QueryOracle projected = zero_project(f, keep);
    const VariableHash phi = VariableHash::uniform(n, buckets, rng);
    const QueryOracle hashed = hash_project(projected, phi);
    const std::size_t m = phi.buckets();
    const SparsePoly learned = learn_poly_positive_examples(
        hashed, s, params.epsilon / 2, rng, audit);

    // Hashed variables that cannot be located are substituted by 0.
    std::map<Var, Var> original;
    for (Var i : relevant_variables(learned)) {
      const Monomial* host = nullptr;
      for (const Monomial& mono : learned.monomials()) {
        if (mono.contains(i)) {
          host = &mono;
          break;
        }
      }
      Assignment on_host = Assignment::indicator(m, host->support());
      Assignment without_i = on_host;
      without_i.set(i, false);
      const auto witness =
          test_equal(zero_project(hashed, on_host),
                     zero_project(hashed, without_i), s,
                     sched.recovery_degree, 1.0 / (32.0 * m), rng, audit);
      if (!witness) continue;
      Assignment a = on_host * *witness;
      a.set(i, false);
      try {
        original[i] = internal::locate_bucket_variable(
            projected, phi, i, a, std::nullopt, &keep, nullptr, audit,
            nullptr);
      } catch (const PromiseViolation&) {
      }
    }
    for (const Monomial& mono : learned.monomials()) {
      std::vector<Var> vars;
      bool mapped = true;
      for (Var v : mono.support()) {
        const auto it = original.find(v);
        if (it == original.end()) {
          mapped = false;
          break;
        }
        vars.push_back(it->second);
      }
      if (mapped) h.toggle(Monomial(std::move(vars)));
    }
  };
  return internal::run_boosted(f, params, "small-beta", predicted, audit,
                               candidate);
}

}  // namespace gf2learn

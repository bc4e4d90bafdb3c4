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

#include "gf2learn/bounds.h"
#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

LearnReport learn_sparse_main(const QueryOracle& f, const LearnParams& params,
                              QueryAudit* audit) {
  params.validate();
  const std::size_t n = f.arity();
  const MainSchedule sched = main_schedule(params);
  const double step_delta = 1.0 / (16.0 * static_cast<double>(sched.projections));
  const double predicted =
      bounds::predicted_queries(params.s, params.epsilon, n,
                                bounds::Algorithm::kMain)
          .value;

  auto candidate = [&](SparsePoly& h, Rng& rng) {
    KnownVariables known;
    for (std::uint64_t k = 0; k < sched.projections; ++k) {
      const Assignment keep = sample_product(n, sched.p, rng);
      ReducedVarsOptions options;
      options.known = &known;
      options.alive = &keep;
      SparsePoly learned(n);
      try {
        learned = learn_reduced_vars(zero_project(f, keep), sched.degree,
                                     params.s, step_delta, rng, audit, options);
      } catch (const PromiseViolation&) {
        // This projection kept a monomial above the degree cap or hashed
        // badly; the remaining projections still cover the short monomials.
        continue;
      }
      for (const Monomial& m : learned.monomials()) {
        if (static_cast<double>(m.degree()) <= sched.size_limit &&
            !h.contains(m)) {
          h.toggle(m);
        }
      }
    }
  };
  return internal::run_boosted(f, params, "main", predicted, audit, candidate);
}

}  // namespace gf2learn

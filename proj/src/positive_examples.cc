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

#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

SparsePoly learn_poly_positive_examples(const QueryOracle& f, std::size_t s,
                                        double epsilon, Rng& rng,
                                        QueryAudit* audit) {
  const std::size_t m = f.arity();
  const PositiveSchedule sched = positive_schedule(s, epsilon);
  const ProductSampler uniform(m, 0.5);
  SparsePoly h(m);
  std::uint64_t find_calls = 0;
  for (std::size_t outer = 0; outer < s; ++outer) {
    bool found = false;
    AuditScope scope(audit, QueryKind::kPositiveSearch, sched.inner_draws);
    for (std::uint64_t t = 0; t < sched.inner_draws && !found; ++t) {
      const QueryOracle residual = xor_local(f, h);
      Assignment a = uniform.sample(rng);
      const bool positive = residual.query(a);
      scope.tick();
      if (!positive) continue;
      if (++find_calls == sched.max_find_calls) {
        scope.stop_early();
        return SparsePoly(m);
      }
      // The restriction found on (f+h)(a*x) composes with a itself.
      a *= find_monomial(and_restrict(residual, a), sched.degree, 2 * s,
                         sched.delta, rng, audit);
      if (static_cast<double>(a.weight()) <= sched.weight_limit) {
        a *= find_monomial(and_restrict(residual, a), sched.degree, 2 * s,
                           sched.delta, rng, audit);
        found = true;
        h.toggle(Monomial(a.support()));
      }
    }
    if (!found) return h;
    scope.stop_early();
  }
  return h;
}

}  // namespace gf2learn

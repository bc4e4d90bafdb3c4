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
#include <string>

#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

SparsePoly learn_exact_low_degree(const QueryOracle& f, std::size_t d,
                                  std::size_t s, double delta, Rng& rng,
                                  QueryAudit* audit) {
  if (d == 0) return internal::learn_constant(f, audit);
  const std::size_t m = f.arity();
  const std::size_t s2 = 2 * std::max<std::size_t>(s, 1);
  const double step_delta = delta / static_cast<double>(s2);
  const SparsePoly zero(m);
  SparsePoly h(m);
  for (std::size_t found = 0;; ++found) {
    const QueryOracle residual = xor_local(f, h);
    if (!test_equal(residual, zero, s2, d, step_delta, rng, audit)) return h;
    if (found == s) {
      throw PromiseViolation("more than " + std::to_string(s) +
                             " monomials found; target is not " +
                             std::to_string(s) + "-sparse of degree <= " +
                             std::to_string(d));
    }
    const Assignment a = find_monomial(residual, d, s2, step_delta, rng, audit);
    h.toggle(Monomial(a.support()));
  }
}

}  // namespace gf2learn

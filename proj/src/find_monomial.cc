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
#include <stdexcept>

#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

std::uint64_t find_monomial_rounds(std::size_t d, std::size_t m,
                                   double delta) {
  if (!(delta > 0 && delta < 1)) {
    throw std::invalid_argument("confidence parameter must lie in (0,1)");
  }
  if (d == 0 || m == 0) return 0;
  return internal::ceil_u64(8.0 * static_cast<double>(d) *
                            std::log(static_cast<double>(m) / delta));
}

Assignment find_monomial(const QueryOracle& f, std::size_t d, std::size_t s,
                         double delta, Rng& rng, QueryAudit* audit) {
  const std::size_t m = f.arity();
  // A degree-0 polynomial that is nonzero is the constant 1.
  if (d == 0) return Assignment::zeros(m);
  const std::uint64_t rounds = find_monomial_rounds(d, m, delta);
  const ProductSampler sampler(m, std::exp2(-1.0 / static_cast<double>(d)));
  const SparsePoly zero(m);
  Assignment a = Assignment::ones(m);
  std::uint64_t r = 0;
  for (; r < rounds; ++r) {
    Assignment c = a * sampler.sample(rng);
    if (test_equal(and_restrict(f, c), zero, s, d, 0.5, rng, audit)) {
      a = std::move(c);
    }
  }
  if (audit != nullptr) audit->record_rounds({r, rounds});
  return a;
}

}  // namespace gf2learn

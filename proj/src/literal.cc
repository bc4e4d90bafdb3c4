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

#include <stdexcept>

#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

Literal identify_literal(const QueryOracle& g, std::span<const Var> candidates,
                         QueryAudit* audit) {
  const std::size_t n = g.arity();
  const std::size_t k = candidates.size();
  const std::size_t bits = internal::ceil_log2(k);
  AuditScope scope(audit, QueryKind::kIdentifyLiteral, bits + 2);

  Assignment point(n);
  const bool at_zero = g.query(point);
  scope.tick();
  for (Var c : candidates) point.set(c);
  const bool at_one = g.query(point);
  scope.tick();
  std::size_t rank = 0;
  for (std::size_t t = 0; t < bits; ++t) {
    Assignment pattern(n);
    for (std::size_t j = 0; j < k; ++j) {
      if ((j >> t) & 1) pattern.set(candidates[j]);
    }
    const bool response = g.query(pattern);
    scope.tick();
    // A negative literal answers with the complement of the rank bit.
    if (response != at_zero) rank |= std::size_t{1} << t;
  }

  if (at_zero == at_one) {
    return {at_zero ? Literal::Kind::kConstant1 : Literal::Kind::kConstant0,
            std::nullopt};
  }
  if (rank >= k) {
    throw PromiseViolation("literal decoding produced rank " +
                           std::to_string(rank) + " of " + std::to_string(k) +
                           " candidates");
  }
  return {at_one ? Literal::Kind::kPositive : Literal::Kind::kNegative,
          candidates[rank]};
}

}  // namespace gf2learn

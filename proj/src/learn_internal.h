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

#ifndef GF2LEARN_SRC_LEARN_INTERNAL_H_
#define GF2LEARN_SRC_LEARN_INTERNAL_H_

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "gf2learn/learner.h"

namespace gf2learn::internal {

inline constexpr std::uint64_t kSaturated =
    std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// ceil(x) for x >= 0, saturating.
inline std::uint64_t ceil_u64(double x) {
  if (!(x > 0)) return 0;
  if (x >= 1.8e19) return kSaturated;
  return static_cast<std::uint64_t>(std::ceil(x));
}

inline std::size_t floor_log2(std::uint64_t x) {
  return static_cast<std::size_t>(std::bit_width(x)) - 1;
}

// ceil(log2 k) with ceil_log2(0) = ceil_log2(1) = 0.
inline std::size_t ceil_log2(std::uint64_t k) {
  return k <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(k - 1));
}

// Narrows the shared root budget for the lifetime of the guard.
class BudgetGuard {
 public:
  BudgetGuard(const QueryOracle& f, std::optional<std::uint64_t> extra);
  ~BudgetGuard();
  BudgetGuard(const BudgetGuard&) = delete;
  BudgetGuard& operator=(const BudgetGuard&) = delete;

 private:
  QueryOracle oracle_;
  std::optional<std::uint64_t> saved_;
};

// One query at the all-zeros point; the answer is the constant.
SparsePoly learn_constant(const QueryOracle& f, QueryAudit* audit);

// Fraction of `samples` uniform points where f and h disagree.
double estimate_disagreement(const QueryOracle& f, const SparsePoly& h,
                             std::uint64_t samples, Rng& rng,
                             QueryAudit* audit, QueryKind kind);

// Locates the original variable behind hashed variable i. `f` has the
// original arity, `a` lives in the hashed space with a_i = 0, and the pinned
// function is expected to be a literal. `value_at_a` is f's known value at
// the pinned point when available. `searched` receives the candidate count.
Var locate_bucket_variable(const QueryOracle& f, const VariableHash& phi,
                           std::size_t i, const Assignment& a,
                           std::optional<bool> value_at_a,
                           const Assignment* alive,
                           const KnownVariables* known, QueryAudit* audit,
                           std::size_t* searched);

// Runs `candidate` up to boost_repetitions(delta) times, validating each
// hypothesis on validation_samples(epsilon, delta) uniform points when more
// than one run is needed. `candidate` writes its partial result into the
// SparsePoly it is given so that budget exhaustion can report it.
using CandidateFn = std::function<void(SparsePoly& h, Rng& rng)>;
LearnReport run_boosted(const QueryOracle& f, const LearnParams& params,
                        const std::string& algorithm, double predicted,
                        QueryAudit* audit, const CandidateFn& candidate);

}  // namespace gf2learn::internal

#endif  // GF2LEARN_SRC_LEARN_INTERNAL_H_

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

#ifndef GF2LEARN_TESTER_H_
#define GF2LEARN_TESTER_H_

#include <cstdint>
#include <optional>
#include <string>

#include "gf2learn/audit.h"
#include "gf2learn/oracle.h"
#include "gf2learn/poly.h"

namespace gf2learn {

enum class Decision { kAccept, kReject };
const char* to_string(Decision d);

struct TestVerdict {
  Decision decision = Decision::kReject;
  std::uint64_t queries_used = 0;
  std::uint64_t budget = 0;  // learning budget B
  std::optional<SparsePoly> hypothesis;
  std::optional<double> estimated_distance;
  std::string reason;
};

struct TesterOptions {
  // B = budget_constant * (worst-case query ceiling of the learner used).
  double budget_constant = 10.0;
};

// ceil(48/eps ln 20).
std::uint64_t distance_samples(double epsilon);

// Learning budget for test_sparsity on an arity-n input.
std::uint64_t tester_budget(std::size_t n, std::size_t s, double epsilon,
                            const TesterOptions& options = {});

// Learn-then-verify: learns with accuracy eps/4 and confidence 9/10 under
// the learning budget, then accepts iff the hypothesis disagrees with f on
// at most an eps/2 fraction of distance_samples(eps) uniform points. Budget
// refusals and promise violations reject.
TestVerdict test_sparsity(const QueryOracle& f, std::size_t s, double epsilon,
                          std::uint64_t seed, QueryAudit* audit = nullptr,
                          const TesterOptions& options = {});

}  // namespace gf2learn

#endif  // GF2LEARN_TESTER_H_

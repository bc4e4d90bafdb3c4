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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "gf2learn/learner.h"
#include "gf2learn/random.h"

namespace gf2learn {
namespace {

// A uniformly random function on n <= 16 variables, as a lookup table.
struct TableFunction {
  std::size_t n;
  std::shared_ptr<std::vector<bool>> table;

  bool at(std::uint64_t index) const { return (*table)[index]; }

  QueryOracle oracle() const {
    auto t = table;
    const std::size_t arity = n;
    return QueryOracle::from_function(arity, [t, arity](const PointView& x) {
      std::uint64_t index = 0;
      for (std::size_t j = 0; j < arity; ++j) {
        if (x.bit(j)) index |= std::uint64_t{1} << j;
      }
      return static_cast<bool>((*t)[index]);
    });
  }
};

TableFunction RandomTable(std::size_t n, Rng& rng) {
  TableFunction f{n, std::make_shared<std::vector<bool>>(std::size_t{1} << n)};
  for (std::size_t x = 0; x < f.table->size(); ++x) (*f.table)[x] = rng() & 1;
  return f;
}

double ExactDistance(const TableFunction& f, const SparsePoly& h) {
  std::uint64_t differ = 0;
  for (std::uint64_t x = 0; x < f.table->size(); ++x) {
    Assignment a(f.n);
    for (std::size_t j = 0; j < f.n; ++j) a.set(j, (x >> j) & 1);
    differ += f.at(x) != h.evaluate(a);
  }
  return static_cast<double>(differ) / static_cast<double>(f.table->size());
}

TEST(TesterTest, DistanceSampleCount) {
  EXPECT_EQ(distance_samples(0.05), 2876u);  // ceil(960 ln 20)
  EXPECT_EQ(distance_samples(0.5), 288u);
}

TEST(TesterTest, BudgetScalesWithConstant) {
  TesterOptions options;
  const std::uint64_t base = tester_budget(12, 4, 0.05, options);
  options.budget_constant = 20;
  EXPECT_NEAR(static_cast<double>(tester_budget(12, 4, 0.05, options)),
              2.0 * base, 1.0);
  LearnParams p;
  p.n = 12;
  p.s = 4;
  p.epsilon = 0.0125;
  p.delta = 0.1;
  EXPECT_EQ(base, 10 * auto_ceiling(p));
}

TEST(TesterTest, AcceptsSparseTargets) {
  Rng rng(1);
  int accepts = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const SparsePoly f = random_sparse_poly(12, 3, 4, rng);
    const QueryOracle o = oracle_from_poly(f);
    QueryAudit audit;
    const TestVerdict v = test_sparsity(o, 4, 0.05, 100 + trial, &audit);
    const std::uint64_t used = o.queries();
    EXPECT_TRUE(audit.discrepancies(&used).empty());
    EXPECT_EQ(v.queries_used, used);
    EXPECT_LE(v.queries_used, v.budget + distance_samples(0.05));
    accepts += v.decision == Decision::kAccept;
  }
  EXPECT_GE(accepts, 9);
}

TEST(TesterTest, RejectsRandomFunctions) {
  Rng rng(2);
  int rejects = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const TableFunction f = RandomTable(12, rng);
    const QueryOracle o = f.oracle();
    const TestVerdict v = test_sparsity(o, 4, 0.05, 200 + trial);
    EXPECT_LE(v.queries_used, v.budget + distance_samples(0.05));
    rejects += v.decision == Decision::kReject;
  }
  EXPECT_EQ(rejects, 5);
}

TEST(TesterTest, DistanceEstimateIsWithinSamplingError) {
  Rng rng(3);
  int checked = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const TableFunction f = RandomTable(10, rng);
    const TestVerdict v = test_sparsity(f.oracle(), 2, 0.1, 300 + trial);
    if (!v.hypothesis || !v.estimated_distance) continue;
    ++checked;
    const double exact = ExactDistance(f, *v.hypothesis);
    const double sigma =
        std::sqrt(exact * (1 - exact) / static_cast<double>(distance_samples(0.1)));
    EXPECT_NEAR(*v.estimated_distance, exact, 3 * sigma + 1e-12);
  }
  EXPECT_GE(checked, 3);
}

TEST(TesterTest, AcceptRateDoesNotDropAsEpsilonGrows) {
  Rng rng(4);
  std::vector<SparsePoly> targets;
  for (int i = 0; i < 6; ++i) targets.push_back(random_sparse_poly(10, 3, 3, rng));
  double previous = 0;
  for (double epsilon : {0.05, 0.1, 0.2}) {
    int accepts = 0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      accepts += test_sparsity(oracle_from_poly(targets[i]), 3, epsilon, i)
                     .decision == Decision::kAccept;
    }
    const double rate = static_cast<double>(accepts) / targets.size();
    EXPECT_GE(rate, previous) << epsilon;
    previous = rate;
  }
}

TEST(TesterTest, TinyBudgetRejects) {
  Rng rng(5);
  const SparsePoly f = random_sparse_poly(12, 3, 4, rng);
  TesterOptions options;
  options.budget_constant = 1e-6;
  const TestVerdict v = test_sparsity(oracle_from_poly(f), 4, 0.05, 1, nullptr,
                                      options);
  EXPECT_EQ(v.decision, Decision::kReject);
  EXPECT_EQ(v.reason, "learning budget exhausted");
  EXPECT_LE(v.queries_used, v.budget);
}

TEST(TesterTest, Deterministic) {
  Rng rng(6);
  const SparsePoly f = random_sparse_poly(12, 3, 4, rng);
  const TestVerdict a = test_sparsity(oracle_from_poly(f), 4, 0.05, 9);
  const TestVerdict b = test_sparsity(oracle_from_poly(f), 4, 0.05, 9);
  EXPECT_EQ(a.decision, b.decision);
  EXPECT_EQ(a.queries_used, b.queries_used);
  EXPECT_EQ(a.estimated_distance, b.estimated_distance);
}

}  // namespace
}  // namespace gf2learn

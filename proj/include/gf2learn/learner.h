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

#ifndef GF2LEARN_LEARNER_H_
#define GF2LEARN_LEARNER_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2learn/assignment.h"
#include "gf2learn/audit.h"
#include "gf2learn/oracle.h"
#include "gf2learn/poly.h"
#include "gf2learn/random.h"

namespace gf2learn {

// The target, or a function derived from it, is outside the promised class,
// or randomness produced an inconsistent intermediate (e.g. a hash collision).
class PromiseViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LearnParams {
  std::size_t s = 1;
  double epsilon = 0.1;
  double delta = 0.1;
  std::size_t n = 0;
  // Maximum queries for this run, on top of whatever the oracle already spent.
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  // Restriction exponent of the main learner; defaults to the minimizer of
  // the gamma objective.
  std::optional<double> eta;

  // log2(1/epsilon) / log2(s); NaN when s == 1.
  double beta() const;
  // Throws std::invalid_argument.
  void validate() const;
};

enum class Outcome { kExact, kApprox, kGaveUpBudget, kDeclaredZero };
const char* to_string(Outcome outcome);

struct LearnReport {
  SparsePoly hypothesis;
  std::uint64_t queries_used = 0;
  double predicted_bound = 0;
  std::chrono::duration<double> elapsed{0};
  Outcome outcome = Outcome::kApprox;
  std::string algorithm;
};

struct Literal {
  enum class Kind { kConstant0, kConstant1, kPositive, kNegative };
  Kind kind = Kind::kConstant0;
  std::optional<Var> var;  // present iff kPositive or kNegative

  friend bool operator==(const Literal&, const Literal&) = default;
};

// ---------------------------------------------------------------------------
// Witness search.

// ceil(2^{H2(min((floor(log2 s)+1)/d, 1/2)) d} ln(1/delta)); 1 when d == 0.
std::uint64_t test_equal_repetitions(std::size_t s, std::size_t d,
                                     double delta);
// max(1 - (floor(log2 s)+1)/d, 1/2).
double test_equal_bias(std::size_t s, std::size_t d);

// Draws test_equal_repetitions(s, d, delta) points from the product
// distribution with bias test_equal_bias(s, d) and returns the first one at
// which f and g differ, or nullopt. g is evaluated locally. When d == 0 both
// sides are constants and a single query at the all-zeros point decides.
std::optional<Assignment> test_equal(const QueryOracle& f, const SparsePoly& g,
                                     std::size_t s, std::size_t d,
                                     double delta, Rng& rng,
                                     QueryAudit* audit = nullptr);

// Two black boxes; every draw queries both, so a full run costs twice the
// repetition count.
std::optional<Assignment> test_equal(const QueryOracle& f,
                                     const QueryOracle& g, std::size_t s,
                                     std::size_t d, double delta, Rng& rng,
                                     QueryAudit* audit = nullptr);

// ceil(8 d ln(m / delta)).
std::uint64_t find_monomial_rounds(std::size_t d, std::size_t m, double delta);

// Starting from a = all-ones, each round draws b from the product
// distribution with bias 2^{-1/d} and keeps a*b when f((a*b)*x) is
// certified nonzero. With f != 0 of degree <= d and sparsity <= s, the
// support of the result is a monomial of f with probability >= 1 - delta.
Assignment find_monomial(const QueryOracle& f, std::size_t d, std::size_t s,
                         double delta, Rng& rng, QueryAudit* audit = nullptr);

// ---------------------------------------------------------------------------
// Exact learning.

// Learns f of degree <= d and sparsity <= s exactly with probability
// >= 1 - delta. Throws PromiseViolation when more than s monomials appear.
SparsePoly learn_exact_low_degree(const QueryOracle& f, std::size_t d,
                                  std::size_t s, double delta, Rng& rng,
                                  QueryAudit* audit = nullptr);

// Non-adaptive: ceil(log2 k) + 2 queries for k candidates. The candidates are
// ranked in the given order. Throws PromiseViolation when the responses
// decode to no member of {0, 1, x_c, not x_c}.
Literal identify_literal(const QueryOracle& g, std::span<const Var> candidates,
                         QueryAudit* audit = nullptr);

// Original variables already located by earlier calls.
using KnownVariables = std::set<Var>;

struct IdentificationRecord {
  Var hashed = 0;
  Var original = 0;
  std::size_t bucket_size = 0;  // candidates searched
  std::uint64_t queries = 0;
};

struct ReducedVarsOptions {
  KnownVariables* known = nullptr;
  // Only coordinates set here can be relevant (e.g. a zero projection's keep
  // mask); other bucket members are never searched.
  const Assignment* alive = nullptr;
  std::vector<IdentificationRecord>* identifications = nullptr;
  // Fresh hashes tried before giving up.
  int max_attempts = 4;
};

// Hashes the n variables into (2ds)^2 buckets, learns the hashed function
// exactly, then locates the original variable behind every relevant bucket.
SparsePoly learn_reduced_vars(const QueryOracle& f, std::size_t d,
                              std::size_t s, double delta, Rng& rng,
                              QueryAudit* audit = nullptr,
                              const ReducedVarsOptions& options = {});

// ---------------------------------------------------------------------------
// Approximate learning.

// Sparse learner driven by uniformly drawn positive examples of f + h.
// Succeeds (distance <= epsilon) with probability >= 15/16.
SparsePoly learn_poly_positive_examples(const QueryOracle& f, std::size_t s,
                                        double epsilon, Rng& rng,
                                        QueryAudit* audit = nullptr);

// Random zero projections, each learned through learn_reduced_vars; keeps
// every learned monomial of size <= log2(s/eps).
LearnReport learn_sparse_main(const QueryOracle& f, const LearnParams& params,
                              QueryAudit* audit = nullptr);

// Mild zero projection, hashing, learn_poly_positive_examples at eps/2, then
// variable recovery from the learned monomials.
LearnReport learn_small_beta(const QueryOracle& f, const LearnParams& params,
                             QueryAudit* audit = nullptr);

enum class Branch { kMain, kSmallBeta };
// kSmallBeta iff gamma'(beta) < gamma(beta); kMain when s == 1.
Branch choose_branch(std::size_t s, double epsilon);

LearnReport learn_auto(const QueryOracle& f, const LearnParams& params,
                       QueryAudit* audit = nullptr);

// ---------------------------------------------------------------------------
// Derived parameters and worst-case query ceilings.

struct MainSchedule {
  double eta = 0;
  double p = 0;  // keep probability
  std::size_t degree = 0;
  std::uint64_t projections = 0;
  double size_limit = 0;  // log2(s/eps)
};
MainSchedule main_schedule(const LearnParams& params);

struct PositiveSchedule {
  std::uint64_t inner_draws = 0;
  std::uint64_t max_find_calls = 0;  // v
  std::size_t degree = 0;
  double delta = 0;
  double weight_limit = 0;
};
PositiveSchedule positive_schedule(std::size_t s, double epsilon);

struct SmallBetaSchedule {
  double keep = 0;
  double degree = 0;
  double buckets = 0;  // nominal 16 (ds)^2
  std::size_t recovery_degree = 0;
};
SmallBetaSchedule small_beta_schedule(std::size_t s, double epsilon);

// Repetitions of the confidence boost and the validation sample size.
std::uint64_t boost_repetitions(double delta);
std::uint64_t validation_samples(double epsilon, double delta);

std::uint64_t find_monomial_ceiling(std::size_t d, std::size_t m,
                                    std::size_t s, double delta);
std::uint64_t exact_low_degree_ceiling(std::size_t m, std::size_t d,
                                       std::size_t s, double delta);
std::uint64_t reduced_vars_ceiling(std::size_t n, std::size_t d,
                                   std::size_t s, double delta,
                                   int max_attempts = 4);
std::uint64_t positive_examples_ceiling(std::size_t m, std::size_t s,
                                        double epsilon);
std::uint64_t sparse_main_ceiling(const LearnParams& params);
std::uint64_t small_beta_ceiling(const LearnParams& params);
std::uint64_t auto_ceiling(const LearnParams& params);

}  // namespace gf2learn

#endif  // GF2LEARN_LEARNER_H_

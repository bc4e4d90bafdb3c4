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

#ifndef GF2LEARN_ORACLE_H_
#define GF2LEARN_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "gf2learn/assignment.h"
#include "gf2learn/poly.h"
#include "gf2learn/random.h"

namespace gf2learn {

// Thrown when a query would exceed the root oracle's budget. The refused
// query is not charged.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

// A map phi: [n] -> [m] stored densely, with per-bucket member lists.
class VariableHash {
 public:
  VariableHash() = default;
  // labels[j] = phi(j); every label must be < buckets.
  VariableHash(std::vector<std::uint32_t> labels, std::size_t buckets);

  static VariableHash identity(std::size_t n);

  // Uniform phi: [n] -> [m]. When m > n the image is relabeled in increasing
  // order onto [|image|], which is an isomorphic map with at most n buckets;
  // nominal_buckets() still reports m.
  static VariableHash uniform(std::size_t n, std::uint64_t m, Rng& rng);

  std::size_t domain() const { return impl_ ? impl_->labels.size() : 0; }
  std::size_t buckets() const { return impl_ ? impl_->buckets : 0; }
  std::uint64_t nominal_buckets() const { return impl_ ? impl_->nominal : 0; }
  std::uint32_t operator[](std::size_t j) const { return impl_->labels[j]; }
  std::span<const Var> bucket(std::size_t i) const;

 private:
  struct Impl {
    std::vector<std::uint32_t> labels;
    std::size_t buckets = 0;
    std::uint64_t nominal = 0;
    std::vector<std::size_t> offsets;  // CSR over members
    std::vector<Var> members;
  };
  static std::shared_ptr<const Impl> build(std::vector<std::uint32_t> labels,
                                           std::size_t buckets,
                                           std::uint64_t nominal);
  std::shared_ptr<const Impl> impl_;
};

// Black-box membership-query handle. Copies share the same underlying
// function and the same root counter. Composition operators return new
// handles whose every query charges exactly one unit at the root.
class QueryOracle {
 public:
  // Opaque composition node and shared root state.
  class Node;
  struct RootState;

  static QueryOracle from_poly(SparsePoly p);
  // `fn` may read any coordinate of its argument.
  static QueryOracle from_function(std::size_t arity,
                                   std::function<bool(const PointView&)> fn);

  std::size_t arity() const { return arity_; }
  bool query(const PointView& x) const;
  bool query(const Assignment& a) const;

  // Root counter; shared by every oracle composed from the same root.
  std::uint64_t queries() const;
  std::optional<std::uint64_t> budget() const;
  void set_budget(std::optional<std::uint64_t> budget);
  // Queries left before refusal; nullopt when unlimited.
  std::optional<std::uint64_t> remaining() const;
  // One line per charged query: "<assignment hex> <response bit>", the
  // assignment being the one presented to the root target.
  void set_trace(std::ostream* out);

  // The polynomial this oracle computes, derived symbolically through the
  // composition chain, when the root target is a SparsePoly. For tests and
  // instrumentation only; never consulted by the learners.
  std::optional<SparsePoly> symbolic() const;

  const std::shared_ptr<const Node>& node() const { return node_; }

 private:
  QueryOracle(std::shared_ptr<const Node> node,
              std::shared_ptr<RootState> root);

  std::shared_ptr<const Node> node_;
  std::shared_ptr<RootState> root_;
  std::size_t arity_ = 0;

  friend QueryOracle and_restrict(const QueryOracle&, const Assignment&);
  friend QueryOracle zero_project(const QueryOracle&, const Assignment&);
  friend QueryOracle xor_local(const QueryOracle&, const SparsePoly&);
  friend QueryOracle hash_project(const QueryOracle&, const VariableHash&);
  friend QueryOracle pin_bucket(const QueryOracle&, const VariableHash&,
                                std::size_t, const Assignment&);
};

QueryOracle oracle_from_poly(SparsePoly p);

// x -> o(a * x).
QueryOracle and_restrict(const QueryOracle& o, const Assignment& a);

// x -> o(keep * x): variables outside keep are replaced by 0.
QueryOracle zero_project(const QueryOracle& o, const Assignment& keep);

// x -> o(x) + h(x); h is evaluated locally at no query cost.
QueryOracle xor_local(const QueryOracle& o, const SparsePoly& h);

// Arity-m oracle y -> o(y_{phi(0)}, ..., y_{phi(n-1)}), m = phi.buckets().
QueryOracle hash_project(const QueryOracle& o, const VariableHash& phi);

// Arity-n oracle x -> o(z) with z_j = x_j when phi(j) == i and
// z_j = a_{phi(j)} otherwise. a has arity phi.buckets().
QueryOracle pin_bucket(const QueryOracle& o, const VariableHash& phi,
                       std::size_t i, const Assignment& a);

}  // namespace gf2learn

#endif  // GF2LEARN_ORACLE_H_

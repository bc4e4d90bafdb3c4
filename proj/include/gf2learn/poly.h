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

#ifndef GF2LEARN_POLY_H_
#define GF2LEARN_POLY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gf2learn/assignment.h"
#include "gf2learn/random.h"

namespace gf2learn {

// Product of distinct variables; the empty product is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  // Sorts and deduplicates (x*x = x over GF(2)).
  explicit Monomial(std::vector<Var> support);
  Monomial(std::initializer_list<Var> support)
      : Monomial(std::vector<Var>(support)) {}

  std::span<const Var> support() const { return vars_; }
  std::size_t degree() const { return vars_.size(); }
  bool is_constant() const { return vars_.empty(); }
  bool contains(Var v) const;

  template <class BitFn>
  bool eval(BitFn&& bit) const {
    for (Var v : vars_) {
      if (!bit(v)) return false;
    }
    return true;
  }

  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Var> vars_;
};

// Multilinear polynomial over GF(2) in `arity` variables, stored as its set of
// monomials. Adding a monomial that is already present cancels it.
class SparsePoly {
 public:
  explicit SparsePoly(std::size_t arity = 0) : arity_(arity) {}
  SparsePoly(std::size_t arity, std::initializer_list<Monomial> monomials);

  static SparsePoly zero(std::size_t arity) { return SparsePoly(arity); }
  static SparsePoly one(std::size_t arity);
  static SparsePoly from_monomial(std::size_t arity, Monomial m);

  std::size_t arity() const { return arity_; }
  std::size_t sparsity() const { return monomials_.size(); }
  // Largest monomial size; 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_zero() const { return monomials_.empty(); }
  const std::set<Monomial>& monomials() const { return monomials_; }
  bool contains(const Monomial& m) const { return monomials_.count(m) != 0; }

  // GF(2) addition of a single monomial.
  void toggle(const Monomial& m);

  bool evaluate(const Assignment& a) const;
  bool evaluate(const PointView& x) const;
  template <class BitFn>
  bool evaluate_with(BitFn&& bit) const {
    bool acc = false;
    for (const Monomial& m : monomials_) acc ^= m.eval(bit);
    return acc;
  }

  SparsePoly& operator+=(const SparsePoly& other);
  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  std::string to_string() const;

 private:
  std::size_t arity_;
  std::set<Monomial> monomials_;
};

// evaluate(p, a): XOR over monomials of the AND of a's bits on each support.
bool evaluate(const SparsePoly& p, const Assignment& a);

// p + q over GF(2).
SparsePoly add(const SparsePoly& p, const SparsePoly& q);

// Symbolic p(a*x): the monomials of p whose support lies inside support(a).
SparsePoly restrict_and(const SparsePoly& p, const Assignment& a);

// Number of monomials of degree <= d in n variables, saturating at 2^63.
std::uint64_t count_monomials(std::size_t n, std::size_t d);

// Exactly s distinct monomials drawn uniformly without replacement from the
// monomials of degree <= d over n variables.
SparsePoly random_sparse_poly(std::size_t n, std::size_t d, std::size_t s,
                              Rng& rng);

// Union of the monomial supports, ascending.
std::vector<Var> relevant_variables(const SparsePoly& p);

// For relevant j, two points differing only at j on which p differs. Writing
// p = x_j f1 + f0, `first` is the indicator of a minimum-degree monomial of
// f1 (so first[j] == 0) and `second` is first with coordinate j set.
std::pair<Assignment, Assignment> witness_pair(const SparsePoly& p, Var j);

inline constexpr std::size_t kDefaultExhaustiveArity = 20;

// Packed truth table of p: bit x of the result is p(x), where coordinate j
// of x is bit j of the index.
std::vector<std::uint64_t> truth_table(const SparsePoly& p,
                                       std::size_t max_arity =
                                           kDefaultExhaustiveArity);

// histogram[w] = number of satisfying assignments of Hamming weight w.
std::vector<std::uint64_t> satisfying_weight_histogram(
    const SparsePoly& p, std::size_t max_arity = kDefaultExhaustiveArity);

// Pr_{x ~ D_{n,q}}[p(x) = 1] by exhaustive enumeration.
double prob_one_exact(const SparsePoly& p, double q,
                      std::size_t max_arity = kDefaultExhaustiveArity);

// Pr_{x ~ D_{n,q}}[p(x) = 1] by inclusion-exclusion over monomial subsets:
// (1 - sum_S (-2)^{|S|} q^{|union S|}) / 2. Cost 2^{sparsity}.
double prob_one_by_monomials(const SparsePoly& p, double q,
                             std::size_t max_sparsity = 24);

// Uniform-distribution distance Pr_x[p(x) != q(x)], computed exactly from
// p + q by enumeration or inclusion-exclusion, whichever is within limits.
// Throws if neither is.
double distance_exact(const SparsePoly& p, const SparsePoly& q);

}  // namespace gf2learn

#endif  // GF2LEARN_POLY_H_

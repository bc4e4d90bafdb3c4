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

#include "gf2learn/poly.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gf2learn {
namespace {

void check_arity(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    std::ostringstream msg;
    msg << what << ": arity mismatch (" << expected << " vs " << got << ")";
    throw std::invalid_argument(msg.str());
  }
}

// Word pattern of variable j < 6 inside a packed truth table.
constexpr std::uint64_t kLowVarPattern[6] = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL};

// Relabels p onto its relevant variables 0..k-1.
SparsePoly compress_to_relevant(const SparsePoly& p) {
  const std::vector<Var> rel = relevant_variables(p);
  SparsePoly out(rel.size());
  for (const Monomial& m : p.monomials()) {
    std::vector<Var> vars;
    vars.reserve(m.degree());
    for (Var v : m.support()) {
      vars.push_back(static_cast<Var>(
          std::lower_bound(rel.begin(), rel.end(), v) - rel.begin()));
    }
    out.toggle(Monomial(std::move(vars)));
  }
  return out;
}

void enumerate_monomials(std::size_t n, std::size_t d, Var start,
                         std::vector<Var>& current,
                         std::vector<Monomial>& out) {
  out.emplace_back(current);
  if (current.size() == d) return;
  for (Var v = start; v < n; ++v) {
    current.push_back(v);
    enumerate_monomials(n, d, v + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Monomial::Monomial(std::vector<Var> support) : vars_(std::move(support)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool Monomial::contains(Var v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string out;
  for (Var v : vars_) out += "x" + std::to_string(v);
  return out;
}

SparsePoly::SparsePoly(std::size_t arity,
                       std::initializer_list<Monomial> monomials)
    : arity_(arity) {
  for (const Monomial& m : monomials) toggle(m);
}

SparsePoly SparsePoly::one(std::size_t arity) {
  return from_monomial(arity, Monomial());
}

SparsePoly SparsePoly::from_monomial(std::size_t arity, Monomial m) {
  SparsePoly p(arity);
  p.toggle(m);
  return p;
}

std::size_t SparsePoly::degree() const {
  std::size_t d = 0;
  for (const Monomial& m : monomials_) d = std::max(d, m.degree());
  return d;
}

void SparsePoly::toggle(const Monomial& m) {
  if (!m.support().empty() && m.support().back() >= arity_) {
    throw std::invalid_argument("monomial index " +
                                std::to_string(m.support().back()) +
                                " out of range for arity " +
                                std::to_string(arity_));
  }
  auto [it, inserted] = monomials_.insert(m);
  if (!inserted) monomials_.erase(it);
}

bool SparsePoly::evaluate(const Assignment& a) const {
  check_arity(arity_, a.arity(), "evaluate");
  return evaluate_with([&](Var v) { return a[v]; });
}

bool SparsePoly::evaluate(const PointView& x) const {
  check_arity(arity_, x.arity(), "evaluate");
  return evaluate_with([&](Var v) { return x.bit(v); });
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_arity(arity_, other.arity_, "add");
  for (const Monomial& m : other.monomials_) toggle(m);
  return *this;
}

std::string SparsePoly::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (const Monomial& m : monomials_) {
    if (!out.empty()) out += " + ";
    out += m.to_string();
  }
  return out;
}

bool evaluate(const SparsePoly& p, const Assignment& a) {
  return p.evaluate(a);
}

SparsePoly add(const SparsePoly& p, const SparsePoly& q) { return p + q; }

SparsePoly restrict_and(const SparsePoly& p, const Assignment& a) {
  check_arity(p.arity(), a.arity(), "restrict_and");
  SparsePoly out(p.arity());
  for (const Monomial& m : p.monomials()) {
    if (m.eval([&](Var v) { return a[v]; })) out.toggle(m);
  }
  return out;
}

std::uint64_t count_monomials(std::size_t n, std::size_t d) {
  constexpr std::uint64_t kCap = 1ULL << 63;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= std::min(n, d); ++k) {
    if (k > 0) {
      // C(n,k) = C(n,k-1) * (n-k+1) / k, carried in 128 bits.
      const unsigned __int128 next =
          static_cast<unsigned __int128>(binom) * (n - k + 1) / k;
      if (next >= kCap) return kCap;
      binom = static_cast<std::uint64_t>(next);
    }
    total += binom;
    if (total >= kCap) return kCap;
  }
  return total;
}

SparsePoly random_sparse_poly(std::size_t n, std::size_t d, std::size_t s,
                              Rng& rng) {
  d = std::min(d, n);
  const std::uint64_t available = count_monomials(n, d);
  if (s > available) {
    throw std::invalid_argument(
        "random_sparse_poly: sparsity " + std::to_string(s) +
        " exceeds the number of monomials of degree <= " + std::to_string(d) +
        " over " + std::to_string(n) + " variables");
  }
  SparsePoly p(n);
  if (available <= (1u << 20)) {
    std::vector<Monomial> all;
    all.reserve(available);
    std::vector<Var> scratch;
    enumerate_monomials(n, d, 0, scratch, all);
    for (std::size_t i = 0; i < s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
      std::swap(all[i], all[pick(rng)]);
      p.toggle(all[i]);
    }
    return p;
  }
  // Degree k with probability C(n,k) / available, then a uniform k-subset.
  std::vector<double> log_weight(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    log_weight[k] = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(static_cast<double>(n - k) + 1.0);
  }
  const double top = *std::max_element(log_weight.begin(), log_weight.end());
  std::vector<double> weight(d + 1);
  for (std::size_t k = 0; k <= d; ++k) weight[k] = std::exp(log_weight[k] - top);
  std::discrete_distribution<std::size_t> degree(weight.begin(), weight.end());
  while (p.sparsity() < s) {
    const std::size_t k = degree(rng);
    // Floyd's subset sampling.
    std::vector<Var> vars;
    for (std::size_t j = n - k; j < n; ++j) {
      std::uniform_int_distribution<std::size_t> pick(0, j);
      const Var t = static_cast<Var>(pick(rng));
      if (std::find(vars.begin(), vars.end(), t) == vars.end()) {
        vars.push_back(t);
      } else {
        vars.push_back(static_cast<Var>(j));
      }
    }
    Monomial m(std::move(vars));
    if (!p.contains(m)) p.toggle(m);
  }
  return p;
}

std::vector<Var> relevant_variables(const SparsePoly& p) {
  std::vector<Var> out;
  for (const Monomial& m : p.monomials()) {
    out.insert(out.end(), m.support().begin(), m.support().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Assignment, Assignment> witness_pair(const SparsePoly& p, Var j) {
  const Monomial* best = nullptr;
  for (const Monomial& m : p.monomials()) {
    if (m.contains(j) && (best == nullptr || m.degree() < best->degree())) {
      best = &m;
    }
  }
  if (best == nullptr) {
    throw std::invalid_argument("witness_pair: variable " + std::to_string(j) +
                                " is not relevant");
  }
  Assignment a = Assignment::indicator(p.arity(), best->support());
  a.set(j, false);
  Assignment b = a;
  b.set(j, true);
  return {std::move(a), std::move(b)};
}

std::vector<std::uint64_t> truth_table(const SparsePoly& p,
                                       std::size_t max_arity) {
  const std::size_t n = p.arity();
  if (n > max_arity) {
    throw std::invalid_argument("exhaustive evaluation limited to arity " +
                                std::to_string(max_arity));
  }
  const std::size_t words = n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  const std::uint64_t valid =
      n >= 6 ? ~0ULL : ((1ULL << (std::size_t{1} << n)) - 1);
  std::vector<std::uint64_t> table(words, 0);
  for (const Monomial& m : p.monomials()) {
    std::uint64_t low = valid;
    std::size_t high_mask = 0;
    for (Var v : m.support()) {
      if (v < 6) {
        low &= kLowVarPattern[v];
      } else {
        high_mask |= std::size_t{1} << (v - 6);
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      if ((w & high_mask) == high_mask) table[w] ^= low;
    }
  }
  return table;
}

std::vector<std::uint64_t> satisfying_weight_histogram(const SparsePoly& p,
                                                       std::size_t max_arity) {
  const std::vector<std::uint64_t> table = truth_table(p, max_arity);
  std::vector<std::uint64_t> hist(p.arity() + 1, 0);
  for (std::size_t w = 0; w < table.size(); ++w) {
    std::uint64_t word = table[w];
    const int high = std::popcount(w);
    while (word != 0) {
      const int low = std::countr_zero(word);
      ++hist[high + std::popcount(static_cast<unsigned>(low))];
      word &= word - 1;
    }
  }
  return hist;
}

double prob_one_exact(const SparsePoly& p, double q, std::size_t max_arity) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("prob_one_exact: bias must lie in [0,1]");
  }
  const std::vector<std::uint64_t> hist =
      satisfying_weight_histogram(p, max_arity);
  const std::size_t n = p.arity();
  long double total = 0;
  for (std::size_t w = 0; w <= n; ++w) {
    if (hist[w] == 0) continue;
    total += hist[w] * std::pow(static_cast<long double>(q), w) *
             std::pow(1.0L - q, n - w);
  }
  return static_cast<double>(total);
}

double prob_one_by_monomials(const SparsePoly& p, double q,
                             std::size_t max_sparsity) {
  if (p.sparsity() > max_sparsity) {
    throw std::invalid_argument("inclusion-exclusion limited to sparsity " +
                                std::to_string(max_sparsity));
  }
  const SparsePoly c = compress_to_relevant(p);
  const std::size_t words = (c.arity() + 63) / 64 + 1;
  std::vector<std::vector<std::uint64_t>> masks;
  for (const Monomial& m : c.monomials()) {
    std::vector<std::uint64_t> mask(words, 0);
    for (Var v : m.support()) mask[v >> 6] |= 1ULL << (v & 63);
    masks.push_back(std::move(mask));
  }
  std::vector<long double> q_pow(c.arity() + 1);
  q_pow[0] = 1;
  for (std::size_t k = 1; k <= c.arity(); ++k) q_pow[k] = q_pow[k - 1] * q;

  // E[(-1)^p] = sum over subsets S of (-2)^{|S|} q^{|union S|}.
  long double signed_sum = 0;
  std::vector<std::vector<std::uint64_t>> stack(masks.size() + 1,
                                                std::vector<std::uint64_t>(words));
  auto dfs = [&](auto&& self, std::size_t i, long double coeff) -> void {
    if (i == masks.size()) {
      std::size_t bits = 0;
      for (std::uint64_t w : stack[i]) bits += std::popcount(w);
      signed_sum += coeff * q_pow[bits];
      return;
    }
    stack[i + 1] = stack[i];
    self(self, i + 1, coeff);
    for (std::size_t w = 0; w < words; ++w) stack[i + 1][w] = stack[i][w] | masks[i][w];
    self(self, i + 1, -2 * coeff);
  };
  dfs(dfs, 0, 1.0L);
  return static_cast<double>((1.0L - signed_sum) / 2);
}

double distance_exact(const SparsePoly& p, const SparsePoly& q) {
  const SparsePoly diff = p + q;
  if (diff.is_zero()) return 0.0;
  const SparsePoly compact = compress_to_relevant(diff);
  if (compact.arity() <= kDefaultExhaustiveArity) {
    return prob_one_exact(compact, 0.5);
  }
  return prob_one_by_monomials(diff, 0.5);
}

}  // namespace gf2learn

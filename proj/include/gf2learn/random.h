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

#ifndef GF2LEARN_RANDOM_H_
#define GF2LEARN_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include "gf2learn/assignment.h"

namespace gf2learn {

using Rng = std::mt19937_64;

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of trial `trial` derived from a run seed: seed XOR mix64(trial).
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ mix64(trial);
}

// Sampler for the p-product distribution D_{n,p}: every coordinate is 1
// independently with probability p.
//
// Each draw consumes one 64-bit word from the generator and derives
// coordinate j as a pure function of (key, j), so a draw can be read lazily
// in any order and materialized later without changing its value.
class ProductSampler {
 public:
  ProductSampler(std::size_t arity, double bias);

  std::size_t arity() const { return arity_; }
  double bias() const { return bias_; }

  class LazyPoint final : public PointView {
   public:
    std::size_t arity() const override { return sampler_->arity_; }
    bool bit(std::size_t j) const override { return sampler_->coordinate(key_, j); }

   private:
    friend class ProductSampler;
    LazyPoint(const ProductSampler* sampler, std::uint64_t key)
        : sampler_(sampler), key_(key) {}
    const ProductSampler* sampler_;
    std::uint64_t key_;
  };

  // The returned point refers to this sampler and must not outlive it.
  LazyPoint draw(Rng& rng) const { return LazyPoint(this, rng()); }
  Assignment sample(Rng& rng) const;

 private:
  bool coordinate(std::uint64_t key, std::size_t j) const {
    if (mode_ != Mode::kThreshold) return mode_ == Mode::kOne;
    return mix64(key + 0x632be59bd9b4e019ULL * (j + 1)) < threshold_;
  }

  enum class Mode { kZero, kOne, kThreshold };

  std::size_t arity_;
  double bias_;
  Mode mode_;
  std::uint64_t threshold_ = 0;
};

// Draws a ~ D_{n,p}.
Assignment sample_product(std::size_t n, double p, Rng& rng);

}  // namespace gf2learn

#endif  // GF2LEARN_RANDOM_H_

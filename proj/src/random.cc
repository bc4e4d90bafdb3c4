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

#include "gf2learn/random.h"

#include <cmath>
#include <stdexcept>

namespace gf2learn {

ProductSampler::ProductSampler(std::size_t arity, double bias)
    : arity_(arity), bias_(bias) {
  if (!(bias >= 0.0 && bias <= 1.0)) {
    throw std::invalid_argument("product distribution bias must lie in [0,1]");
  }
  if (bias == 0.0) {
    mode_ = Mode::kZero;
  } else if (bias == 1.0) {
    mode_ = Mode::kOne;
  } else {
    mode_ = Mode::kThreshold;
    // Pr[u < T] = T / 2^64 for uniform 64-bit u.
    threshold_ = static_cast<std::uint64_t>(std::ldexp(bias, 64));
  }
}

Assignment ProductSampler::sample(Rng& rng) const {
  return materialize(draw(rng));
}

Assignment sample_product(std::size_t n, double p, Rng& rng) {
  return ProductSampler(n, p).sample(rng);
}

}  // namespace gf2learn

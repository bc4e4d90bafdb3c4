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

#include "gf2learn/assignment.h"

#include <bit>
#include <stdexcept>

namespace gf2learn {

Assignment::Assignment(std::size_t arity, bool fill)
    : arity_(arity), words_((arity + 63) / 64, fill ? ~0ULL : 0ULL) {
  clear_tail();
}

Assignment Assignment::indicator(std::size_t arity,
                                 std::span<const Var> support) {
  Assignment a(arity);
  for (Var v : support) a.set(v);
  return a;
}

Assignment Assignment::from_bits(const std::string& bits) {
  Assignment a(bits.size());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      a.set(j);
    } else if (bits[j] != '0') {
      throw std::invalid_argument("assignment bits must be '0' or '1'");
    }
  }
  return a;
}

bool Assignment::get(std::size_t j) const {
  if (j >= arity_) throw std::out_of_range("assignment index out of range");
  return (*this)[j];
}

void Assignment::set(std::size_t j, bool value) {
  if (j >= arity_) throw std::out_of_range("assignment index out of range");
  const std::uint64_t mask = 1ULL << (j & 63);
  if (value) {
    words_[j >> 6] |= mask;
  } else {
    words_[j >> 6] &= ~mask;
  }
}

void Assignment::flip(std::size_t j) {
  if (j >= arity_) throw std::out_of_range("assignment index out of range");
  words_[j >> 6] ^= 1ULL << (j & 63);
}

std::size_t Assignment::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

std::vector<Var> Assignment::support() const {
  std::vector<Var> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t word = words_[k];
    while (word != 0) {
      out.push_back(static_cast<Var>(k * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

Assignment Assignment::operator*(const Assignment& other) const {
  Assignment out = *this;
  out *= other;
  return out;
}

Assignment& Assignment::operator*=(const Assignment& other) {
  if (other.arity_ != arity_) {
    throw std::invalid_argument("componentwise product: arity mismatch");
  }
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::string Assignment::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = arity_ == 0 ? 1 : (arity_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t j = d * 4 + b;
      if (j < arity_ && (*this)[j]) nibble |= 1u << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::string Assignment::to_bits() const {
  std::string out(arity_, '0');
  for (std::size_t j = 0; j < arity_; ++j) {
    if ((*this)[j]) out[j] = '1';
  }
  return out;
}

void Assignment::clear_tail() {
  if (arity_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (1ULL << (arity_ % 64)) - 1;
  }
}

Assignment materialize(const PointView& view) {
  Assignment a(view.arity());
  for (std::size_t j = 0; j < view.arity(); ++j) {
    if (view.bit(j)) a.set(j);
  }
  return a;
}

}  // namespace gf2learn

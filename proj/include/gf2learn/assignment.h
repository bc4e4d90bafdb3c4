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

#ifndef GF2LEARN_ASSIGNMENT_H_
#define GF2LEARN_ASSIGNMENT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gf2learn {

// Variable index. Polynomials up to ~4e9 variables are representable; the
// learners allocate O(n) words per materialized point, so practical arity is
// far lower.
using Var = std::uint32_t;

// Read-only view of a query point. Coordinates may be produced lazily, which
// lets composed oracles touch only the coordinates a target actually reads.
class PointView {
 public:
  virtual ~PointView() = default;
  virtual std::size_t arity() const = 0;
  virtual bool bit(std::size_t j) const = 0;
};

// A point of {0,1}^n stored as packed 64-bit words.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t arity, bool fill = false);

  static Assignment zeros(std::size_t arity) { return Assignment(arity); }
  static Assignment ones(std::size_t arity) { return Assignment(arity, true); }
  // Indicator vector of `support`.
  static Assignment indicator(std::size_t arity, std::span<const Var> support);
  // Parses a string of '0'/'1' characters, coordinate 0 first.
  static Assignment from_bits(const std::string& bits);

  std::size_t arity() const { return arity_; }

  bool operator[](std::size_t j) const {
    return (words_[j >> 6] >> (j & 63)) & 1;
  }
  bool get(std::size_t j) const;  // bounds-checked
  void set(std::size_t j, bool value = true);
  void flip(std::size_t j);

  // Hamming weight wt(a).
  std::size_t weight() const;
  std::vector<Var> support() const;

  // Componentwise product a*b.
  Assignment operator*(const Assignment& other) const;
  Assignment& operator*=(const Assignment& other);

  std::span<const std::uint64_t> words() const { return words_; }

  // Hex rendering with coordinate j contributing 2^j; most significant digit
  // first. Used by query traces.
  std::string to_hex() const;
  // '0'/'1' characters, coordinate 0 first.
  std::string to_bits() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  void clear_tail();

  std::size_t arity_ = 0;
  std::vector<std::uint64_t> words_;
};

class AssignmentView final : public PointView {
 public:
  explicit AssignmentView(const Assignment& a) : a_(a) {}
  std::size_t arity() const override { return a_.arity(); }
  bool bit(std::size_t j) const override { return a_[j]; }

 private:
  const Assignment& a_;
};

// Reads every coordinate of `view`.
Assignment materialize(const PointView& view);

}  // namespace gf2learn

#endif  // GF2LEARN_ASSIGNMENT_H_

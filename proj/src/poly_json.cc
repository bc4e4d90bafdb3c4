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

#include "gf2learn/poly_json.h"

#include <stdexcept>
#include <vector>

namespace gf2learn {

nlohmann::json poly_to_json(const SparsePoly& p) {
  nlohmann::json monomials = nlohmann::json::array();
  for (const Monomial& m : p.monomials()) {
    monomials.push_back(
        std::vector<Var>(m.support().begin(), m.support().end()));
  }
  return {{"n", p.arity()}, {"monomials", std::move(monomials)}};
}

SparsePoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("monomials")) {
    throw std::invalid_argument(
        "polynomial JSON needs fields \"n\" and \"monomials\"");
  }
  if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer()) {
    throw std::invalid_argument("\"n\" must be a non-negative integer");
  }
  const auto n = j["n"].get<long long>();
  if (n < 0) throw std::invalid_argument("\"n\" must be non-negative");
  if (!j["monomials"].is_array()) {
    throw std::invalid_argument("\"monomials\" must be an array");
  }
  SparsePoly p(static_cast<std::size_t>(n));
  for (const auto& m : j["monomials"]) {
    if (!m.is_array()) {
      throw std::invalid_argument("each monomial must be an array of indices");
    }
    std::vector<Var> vars;
    for (const auto& v : m) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument("variable indices must be integers");
      }
      const auto idx = v.get<long long>();
      if (idx < 0 || idx >= n) {
        throw std::invalid_argument("variable index " + std::to_string(idx) +
                                    " out of range [0, " + std::to_string(n) +
                                    ")");
      }
      vars.push_back(static_cast<Var>(idx));
    }
    p.toggle(Monomial(std::move(vars)));
  }
  return p;
}

std::string poly_to_json_string(const SparsePoly& p) {
  return poly_to_json(p).dump();
}

SparsePoly poly_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return poly_from_json(j);
}

}  // namespace gf2learn

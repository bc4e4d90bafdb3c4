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

#ifndef GF2LEARN_POLY_JSON_H_
#define GF2LEARN_POLY_JSON_H_

#include <string>

#include "gf2learn/poly.h"
#include "json.hpp"

namespace gf2learn {

// Serialized form: {"n": <arity>, "monomials": [[i, j, ...], ...]} with each
// support ascending and monomials in lexicographic order. The constant 1 is
// the empty list [].
nlohmann::json poly_to_json(const SparsePoly& p);

// Accepts any monomial order and repeated indices inside a monomial.
// Duplicate monomials cancel. Throws std::invalid_argument on malformed input.
SparsePoly poly_from_json(const nlohmann::json& j);

std::string poly_to_json_string(const SparsePoly& p);
SparsePoly poly_from_json_string(const std::string& text);

}  // namespace gf2learn

#endif  // GF2LEARN_POLY_JSON_H_

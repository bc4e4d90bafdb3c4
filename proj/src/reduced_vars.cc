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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "gf2learn/learner.h"
#include "learn_internal.h"

namespace gf2learn {

SparsePoly learn_reduced_vars(const QueryOracle& f, std::size_t d,
                              std::size_t s, double delta, Rng& rng,
                              QueryAudit* audit,
                              const ReducedVarsOptions& options) {
  const std::size_t n = f.arity();
  if (d == 0) return internal::learn_constant(f, audit);
  const double nominal = std::pow(2.0 * static_cast<double>(d) * s, 2.0);
  const auto buckets = static_cast<std::uint64_t>(nominal);
  const double inner_delta = std::min(delta, 1.0 / 16.0);

  std::string last_error = "no attempts made";
  for (int attempt = 0; attempt < std::max(options.max_attempts, 1);
       ++attempt) {
    const VariableHash phi = VariableHash::uniform(n, buckets, rng);
    const QueryOracle hashed = hash_project(f, phi);
    try {
      const SparsePoly learned =
          learn_exact_low_degree(hashed, d, s, inner_delta, rng, audit);
      if (learned.is_zero()) return SparsePoly(n);

      std::map<Var, Var> original;
      std::vector<IdentificationRecord> records;
      for (Var i : relevant_variables(learned)) {
        auto [a, b] = witness_pair(learned, i);
        const std::uint64_t before = f.queries();
        std::size_t searched = 0;
        const Var u = internal::locate_bucket_variable(
            f, phi, i, a, learned.evaluate(a), options.alive, options.known,
            audit, &searched);
        for (const auto& [hashed_var, orig] : original) {
          if (orig == u) {
            throw PromiseViolation("buckets " + std::to_string(hashed_var) +
                                   " and " + std::to_string(i) +
                                   " resolve to the same variable");
          }
        }
        original[i] = u;
        records.push_back({i, u, searched, f.queries() - before});
      }

      SparsePoly out(n);
      for (const Monomial& m : learned.monomials()) {
        std::vector<Var> vars;
        for (Var v : m.support()) vars.push_back(original.at(v));
        out.toggle(Monomial(std::move(vars)));
      }
      if (options.known != nullptr) {
        for (const auto& entry : original) options.known->insert(entry.second);
      }
      if (options.identifications != nullptr) {
        options.identifications->insert(options.identifications->end(),
                                        records.begin(), records.end());
      }
      return out;
    } catch (const PromiseViolation& e) {
      last_error = e.what();
    }
  }
  throw PromiseViolation("variable reduction failed after " +
                         std::to_string(options.max_attempts) +
                         " hashes: " + last_error);
}

}  // namespace gf2learn

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

#include "gf2learn/audit.h"

#include <exception>

namespace gf2learn {

const char* to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::kTestEqual:
      return "test_equal";
    case QueryKind::kIdentifyLiteral:
      return "identify_literal";
    case QueryKind::kKnownProbe:
      return "known_probe";
    case QueryKind::kPositiveSearch:
      return "positive_search";
    case QueryKind::kConstantProbe:
      return "constant_probe";
    case QueryKind::kValidation:
      return "validation";
    case QueryKind::kDistanceEstimate:
      return "distance_estimate";
  }
  return "unknown";
}

std::uint64_t QueryAudit::total_issued() const {
  std::uint64_t total = 0;
  for (const AuditRecord& r : records_) total += r.issued;
  return total;
}

std::uint64_t QueryAudit::total_issued(QueryKind kind) const {
  std::uint64_t total = 0;
  for (const AuditRecord& r : records_) {
    if (r.kind == kind) total += r.issued;
  }
  return total;
}

std::vector<std::string> QueryAudit::discrepancies(
    const std::uint64_t* counter_delta) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const AuditRecord& r = records_[i];
    const std::string where = "record " + std::to_string(i) + " (" +
                              to_string(r.kind) + "): issued " +
                              std::to_string(r.issued) + ", ceiling " +
                              std::to_string(r.ceiling);
    if (r.issued > r.ceiling) out.push_back(where + " exceeds ceiling");
    if (!r.early_exit && r.issued != r.ceiling) {
      out.push_back(where + " ran to completion below ceiling");
    }
  }
  for (std::size_t i = 0; i < rounds_.size(); ++i) {
    if (rounds_[i].rounds > rounds_[i].ceiling) {
      out.push_back("round record " + std::to_string(i) + ": " +
                    std::to_string(rounds_[i].rounds) + " rounds exceed " +
                    std::to_string(rounds_[i].ceiling));
    }
  }
  if (counter_delta != nullptr && *counter_delta != total_issued()) {
    out.push_back("root counter advanced by " + std::to_string(*counter_delta) +
                  " but records sum to " + std::to_string(total_issued()));
  }
  return out;
}

void QueryAudit::clear() {
  records_.clear();
  rounds_.clear();
}

AuditScope::AuditScope(QueryAudit* audit, QueryKind kind,
                       std::uint64_t ceiling)
    : audit_(audit),
      kind_(kind),
      ceiling_(ceiling),
      uncaught_(std::uncaught_exceptions()) {}

AuditScope::~AuditScope() {
  if (audit_ == nullptr) return;
  const bool unwinding = std::uncaught_exceptions() > uncaught_;
  audit_->record({kind_, issued_, ceiling_, early_exit_ || unwinding});
}

}  // namespace gf2learn

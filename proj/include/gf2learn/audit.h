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

#ifndef GF2LEARN_AUDIT_H_
#define GF2LEARN_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace gf2learn {

// Subroutines that issue membership queries directly. Every query a learner
// makes is issued by exactly one of these.
enum class QueryKind {
  kTestEqual,
  kIdentifyLiteral,
  kKnownProbe,
  kPositiveSearch,
  kConstantProbe,
  kValidation,
  kDistanceEstimate,
};

const char* to_string(QueryKind kind);

struct AuditRecord {
  QueryKind kind;
  std::uint64_t issued = 0;
  // Closed-form number of queries the call makes when it runs to completion.
  std::uint64_t ceiling = 0;
  // True when the call stopped before its ceiling (witness found, decoding
  // finished early, budget refusal).
  bool early_exit = false;
};

struct RoundRecord {
  std::uint64_t rounds = 0;
  std::uint64_t ceiling = 0;
};

// Per-call query ledger. Subroutines count the queries they issue themselves;
// the harness compares the sum with the root oracle counter.
class QueryAudit {
 public:
  void record(const AuditRecord& r) { records_.push_back(r); }
  void record_rounds(const RoundRecord& r) { rounds_.push_back(r); }

  const std::vector<AuditRecord>& records() const { return records_; }
  const std::vector<RoundRecord>& rounds() const { return rounds_; }

  std::uint64_t total_issued() const;
  std::uint64_t total_issued(QueryKind kind) const;

  // Violations of: issued <= ceiling; issued == ceiling unless early_exit;
  // rounds <= ceiling; and, when given, total_issued() == counter_delta.
  std::vector<std::string> discrepancies(
      const std::uint64_t* counter_delta = nullptr) const;

  void clear();

 private:
  std::vector<AuditRecord> records_;
  std::vector<RoundRecord> rounds_;
};

// Counts queries for one subroutine call and records them on destruction.
// If the scope unwinds through an exception the call is marked early_exit.
class AuditScope {
 public:
  AuditScope(QueryAudit* audit, QueryKind kind, std::uint64_t ceiling);
  ~AuditScope();
  AuditScope(const AuditScope&) = delete;
  AuditScope& operator=(const AuditScope&) = delete;

  void tick() { ++issued_; }
  void stop_early() { early_exit_ = true; }
  std::uint64_t issued() const { return issued_; }

 private:
  QueryAudit* audit_;
  QueryKind kind_;
  std::uint64_t ceiling_;
  std::uint64_t issued_ = 0;
  bool early_exit_ = false;
  int uncaught_ = 0;
};

}  // namespace gf2learn

#endif  // GF2LEARN_AUDIT_H_

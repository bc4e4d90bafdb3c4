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

#include "gf2learn/oracle.h"

#include <algorithm>
#include <string>
#include <utility>

namespace gf2learn {

struct QueryOracle::RootState {
  std::uint64_t count = 0;
  std::optional<std::uint64_t> budget;
  std::ostream* trace = nullptr;
};

class QueryOracle::Node {
 public:
  virtual ~Node() = default;
  virtual std::size_t arity() const = 0;
  virtual bool eval(const PointView& x, RootState& root) const = 0;
  virtual std::optional<SparsePoly> symbolic() const = 0;
};

namespace {

using Node = QueryOracle::Node;

void require_arity(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw std::invalid_argument(std::string(what) + ": arity mismatch (" +
                                std::to_string(expected) + " vs " +
                                std::to_string(got) + ")");
  }
}

// Monomials laid out contiguously for fast repeated evaluation.
class FlatPoly {
 public:
  explicit FlatPoly(const SparsePoly& p) {
    offsets_.push_back(0);
    for (const Monomial& m : p.monomials()) {
      vars_.insert(vars_.end(), m.support().begin(), m.support().end());
      offsets_.push_back(static_cast<std::uint32_t>(vars_.size()));
    }
  }
  bool empty() const { return offsets_.size() == 1; }
  bool eval(const PointView& x) const {
    bool acc = false;
    const std::size_t count = offsets_.size() - 1;
    for (std::size_t k = 0; k < count; ++k) {
      bool term = true;
      for (std::uint32_t t = offsets_[k]; t < offsets_[k + 1]; ++t) {
        if (!x.bit(vars_[t])) {
          term = false;
          break;
        }
      }
      acc ^= term;
    }
    return acc;
  }

 private:
  std::vector<Var> vars_;
  std::vector<std::uint32_t> offsets_;
};

class MaskView final : public PointView {
 public:
  MaskView(const PointView& x, const Assignment& mask) : x_(x), mask_(mask) {}
  std::size_t arity() const override { return x_.arity(); }
  bool bit(std::size_t j) const override { return mask_[j] && x_.bit(j); }

 private:
  const PointView& x_;
  const Assignment& mask_;
};

class HashView final : public PointView {
 public:
  HashView(const PointView& y, const VariableHash& phi) : y_(y), phi_(phi) {}
  std::size_t arity() const override { return phi_.domain(); }
  bool bit(std::size_t j) const override { return y_.bit(phi_[j]); }

 private:
  const PointView& y_;
  const VariableHash& phi_;
};

class PinView final : public PointView {
 public:
  PinView(const PointView& x, const VariableHash& phi, std::size_t bucket,
          const Assignment& pinned)
      : x_(x), phi_(phi), bucket_(bucket), pinned_(pinned) {}
  std::size_t arity() const override { return x_.arity(); }
  bool bit(std::size_t j) const override {
    const std::uint32_t label = phi_[j];
    return label == bucket_ ? x_.bit(j) : pinned_[label];
  }

 private:
  const PointView& x_;
  const VariableHash& phi_;
  std::size_t bucket_;
  const Assignment& pinned_;
};

}  // namespace

namespace {

class PolyTarget final : public Node {
 public:
  explicit PolyTarget(SparsePoly p) : p_(std::move(p)), flat_(p_) {}
  std::size_t arity() const override { return p_.arity(); }
  bool eval(const PointView& x, QueryOracle::RootState&) const override {
    return flat_.eval(x);
  }
  std::optional<SparsePoly> symbolic() const override { return p_; }

 private:
  SparsePoly p_;
  FlatPoly flat_;
};

class FunctionTarget final : public Node {
 public:
  FunctionTarget(std::size_t arity, std::function<bool(const PointView&)> fn)
      : arity_(arity), fn_(std::move(fn)) {}
  std::size_t arity() const override { return arity_; }
  bool eval(const PointView& x, QueryOracle::RootState&) const override {
    return fn_(x);
  }
  std::optional<SparsePoly> symbolic() const override { return std::nullopt; }

 private:
  std::size_t arity_;
  std::function<bool(const PointView&)> fn_;
};

// Charges the root, then delegates to the target.
class ChargedRoot final : public Node {
 public:
  explicit ChargedRoot(std::shared_ptr<const Node> target)
      : target_(std::move(target)) {}
  std::size_t arity() const override { return target_->arity(); }
  bool eval(const PointView& x, QueryOracle::RootState& root) const override;
  std::optional<SparsePoly> symbolic() const override {
    return target_->symbolic();
  }

 private:
  std::shared_ptr<const Node> target_;
};

class MaskNode final : public Node {
 public:
  MaskNode(std::shared_ptr<const Node> parent, Assignment mask)
      : parent_(std::move(parent)), mask_(std::move(mask)) {}
  std::size_t arity() const override { return parent_->arity(); }
  bool eval(const PointView& x, QueryOracle::RootState& root) const override {
    return parent_->eval(MaskView(x, mask_), root);
  }
  std::optional<SparsePoly> symbolic() const override {
    auto p = parent_->symbolic();
    if (!p) return std::nullopt;
    return restrict_and(*p, mask_);
  }
  const std::shared_ptr<const Node>& parent() const { return parent_; }
  const Assignment& mask() const { return mask_; }

 private:
  std::shared_ptr<const Node> parent_;
  Assignment mask_;
};

class XorNode final : public Node {
 public:
  XorNode(std::shared_ptr<const Node> parent, SparsePoly h)
      : parent_(std::move(parent)), h_(std::move(h)), flat_(h_) {}
  std::size_t arity() const override { return parent_->arity(); }
  bool eval(const PointView& x, QueryOracle::RootState& root) const override {
    const bool base = parent_->eval(x, root);
    return base != flat_.eval(x);
  }
  std::optional<SparsePoly> symbolic() const override {
    auto p = parent_->symbolic();
    if (!p) return std::nullopt;
    return *p + h_;
  }

 private:
  std::shared_ptr<const Node> parent_;
  SparsePoly h_;
  FlatPoly flat_;
};

class HashNode final : public Node {
 public:
  HashNode(std::shared_ptr<const Node> parent, VariableHash phi)
      : parent_(std::move(parent)), phi_(std::move(phi)) {}
  std::size_t arity() const override { return phi_.buckets(); }
  bool eval(const PointView& y, QueryOracle::RootState& root) const override {
    return parent_->eval(HashView(y, phi_), root);
  }
  std::optional<SparsePoly> symbolic() const override {
    auto p = parent_->symbolic();
    if (!p) return std::nullopt;
    SparsePoly out(phi_.buckets());
    for (const Monomial& m : p->monomials()) {
      std::vector<Var> vars;
      for (Var v : m.support()) vars.push_back(phi_[v]);
      out.toggle(Monomial(std::move(vars)));
    }
    return out;
  }

 private:
  std::shared_ptr<const Node> parent_;
  VariableHash phi_;
};

class PinNode final : public Node {
 public:
  PinNode(std::shared_ptr<const Node> parent, VariableHash phi,
          std::size_t bucket, Assignment pinned)
      : parent_(std::move(parent)),
        phi_(std::move(phi)),
        bucket_(bucket),
        pinned_(std::move(pinned)) {}
  std::size_t arity() const override { return parent_->arity(); }
  bool eval(const PointView& x, QueryOracle::RootState& root) const override {
    return parent_->eval(PinView(x, phi_, bucket_, pinned_), root);
  }
  std::optional<SparsePoly> symbolic() const override {
    auto p = parent_->symbolic();
    if (!p) return std::nullopt;
    SparsePoly out(p->arity());
    for (const Monomial& m : p->monomials()) {
      std::vector<Var> vars;
      bool alive = true;
      for (Var v : m.support()) {
        const std::uint32_t label = phi_[v];
        if (label == bucket_) {
          vars.push_back(v);
        } else if (!pinned_[label]) {
          alive = false;
          break;
        }
      }
      if (alive) out.toggle(Monomial(std::move(vars)));
    }
    return out;
  }

 private:
  std::shared_ptr<const Node> parent_;
  VariableHash phi_;
  std::size_t bucket_;
  Assignment pinned_;
};

bool ChargedRoot::eval(const PointView& x, QueryOracle::RootState& root) const {
  if (root.budget && root.count >= *root.budget) {
    throw BudgetExhausted(*root.budget);
  }
  ++root.count;
  if (root.trace == nullptr) return target_->eval(x, root);
  // Materialize once so the trace shows exactly the point that was answered.
  const Assignment point = materialize(x);
  const bool value = target_->eval(AssignmentView(point), root);
  *root.trace << point.to_hex() << ' ' << (value ? 1 : 0) << '\n';
  return value;
}

}  // namespace

BudgetExhausted::BudgetExhausted(std::uint64_t budget)
    : std::runtime_error("query budget of " + std::to_string(budget) +
                         " exhausted"),
      budget_(budget) {}

VariableHash::VariableHash(std::vector<std::uint32_t> labels,
                           std::size_t buckets)
    : impl_(build(std::move(labels), buckets, buckets)) {}

std::shared_ptr<const VariableHash::Impl> VariableHash::build(
    std::vector<std::uint32_t> labels, std::size_t buckets,
    std::uint64_t nominal) {
  auto impl = std::make_shared<Impl>();
  impl->buckets = buckets;
  impl->nominal = nominal;
  impl->offsets.assign(buckets + 1, 0);
  for (std::uint32_t label : labels) {
    if (label >= buckets) {
      throw std::invalid_argument("hash label " + std::to_string(label) +
                                  " out of range [0, " +
                                  std::to_string(buckets) + ")");
    }
    ++impl->offsets[label + 1];
  }
  for (std::size_t i = 0; i < buckets; ++i) {
    impl->offsets[i + 1] += impl->offsets[i];
  }
  impl->members.resize(labels.size());
  std::vector<std::size_t> cursor(impl->offsets.begin(),
                                  impl->offsets.end() - 1);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    impl->members[cursor[labels[j]]++] = static_cast<Var>(j);
  }
  impl->labels = std::move(labels);
  return impl;
}

VariableHash VariableHash::identity(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t j = 0; j < n; ++j) labels[j] = static_cast<std::uint32_t>(j);
  return VariableHash(std::move(labels), n);
}

VariableHash VariableHash::uniform(std::size_t n, std::uint64_t m, Rng& rng) {
  if (m == 0) throw std::invalid_argument("hash range must be nonempty");
  std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
  std::vector<std::uint64_t> raw(n);
  for (auto& r : raw) r = pick(rng);
  std::vector<std::uint32_t> labels(n);
  std::size_t buckets = static_cast<std::size_t>(m);
  if (m > n) {
    std::vector<std::uint64_t> image = raw;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    for (std::size_t j = 0; j < n; ++j) {
      labels[j] = static_cast<std::uint32_t>(
          std::lower_bound(image.begin(), image.end(), raw[j]) -
          image.begin());
    }
    buckets = image.size();
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      labels[j] = static_cast<std::uint32_t>(raw[j]);
    }
  }
  VariableHash phi;
  phi.impl_ = build(std::move(labels), buckets, m);
  return phi;
}

std::span<const Var> VariableHash::bucket(std::size_t i) const {
  if (i >= buckets()) throw std::out_of_range("bucket index out of range");
  return std::span<const Var>(impl_->members)
      .subspan(impl_->offsets[i], impl_->offsets[i + 1] - impl_->offsets[i]);
}

QueryOracle::QueryOracle(std::shared_ptr<const Node> node,
                         std::shared_ptr<RootState> root)
    : node_(std::move(node)), root_(std::move(root)), arity_(node_->arity()) {}

QueryOracle QueryOracle::from_poly(SparsePoly p) {
  return QueryOracle(
      std::make_shared<ChargedRoot>(std::make_shared<PolyTarget>(std::move(p))),
      std::make_shared<RootState>());
}

QueryOracle QueryOracle::from_function(
    std::size_t arity, std::function<bool(const PointView&)> fn) {
  return QueryOracle(std::make_shared<ChargedRoot>(
                         std::make_shared<FunctionTarget>(arity, std::move(fn))),
                     std::make_shared<RootState>());
}

bool QueryOracle::query(const PointView& x) const {
  if (x.arity() != arity_) require_arity(arity_, x.arity(), "query");
  return node_->eval(x, *root_);
}

bool QueryOracle::query(const Assignment& a) const {
  return query(AssignmentView(a));
}

std::uint64_t QueryOracle::queries() const { return root_->count; }

std::optional<std::uint64_t> QueryOracle::budget() const {
  return root_->budget;
}

void QueryOracle::set_budget(std::optional<std::uint64_t> budget) {
  root_->budget = budget;
}

std::optional<std::uint64_t> QueryOracle::remaining() const {
  if (!root_->budget) return std::nullopt;
  return *root_->budget > root_->count ? *root_->budget - root_->count : 0;
}

void QueryOracle::set_trace(std::ostream* out) { root_->trace = out; }

std::optional<SparsePoly> QueryOracle::symbolic() const {
  return node_->symbolic();
}

QueryOracle oracle_from_poly(SparsePoly p) {
  return QueryOracle::from_poly(std::move(p));
}

namespace {

// Consecutive masks collapse into one: o(a * (b * x)) = o((a * b) * x).
std::shared_ptr<const Node> masked(const std::shared_ptr<const Node>& node,
                                   const Assignment& mask) {
  if (const auto* inner = dynamic_cast<const MaskNode*>(node.get())) {
    return std::make_shared<MaskNode>(inner->parent(), inner->mask() * mask);
  }
  return std::make_shared<MaskNode>(node, mask);
}

}  // namespace

QueryOracle and_restrict(const QueryOracle& o, const Assignment& a) {
  require_arity(o.arity(), a.arity(), "and_restrict");
  return QueryOracle(masked(o.node_, a), o.root_);
}

QueryOracle zero_project(const QueryOracle& o, const Assignment& keep) {
  require_arity(o.arity(), keep.arity(), "zero_project");
  return QueryOracle(masked(o.node_, keep), o.root_);
}

QueryOracle xor_local(const QueryOracle& o, const SparsePoly& h) {
  require_arity(o.arity(), h.arity(), "xor_local");
  if (h.is_zero()) return o;
  return QueryOracle(std::make_shared<XorNode>(o.node_, h), o.root_);
}

QueryOracle hash_project(const QueryOracle& o, const VariableHash& phi) {
  require_arity(o.arity(), phi.domain(), "hash_project");
  return QueryOracle(std::make_shared<HashNode>(o.node_, phi), o.root_);
}

QueryOracle pin_bucket(const QueryOracle& o, const VariableHash& phi,
                       std::size_t i, const Assignment& a) {
  require_arity(o.arity(), phi.domain(), "pin_bucket");
  require_arity(phi.buckets(), a.arity(), "pin_bucket");
  if (i >= phi.buckets()) throw std::out_of_range("bucket index out of range");
  return QueryOracle(std::make_shared<PinNode>(o.node_, phi, i, a), o.root_);
}

}  // namespace gf2learn

// Copyright 2026 The itohopf Authors.
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

#include "itohopf/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <tuple>

namespace itohopf {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

std::string idx_str(int i) { return std::to_string(i + 1); }

}  // namespace

std::shared_ptr<const AlgebraDef> AlgebraDef::create(
    std::vector<std::string> basis_names,
    const std::vector<StructureConstant>& constants) {
  if (basis_names.empty()) throw std::invalid_argument("algebra dimension must be positive");
  std::set<std::string> seen;
  for (const auto& n : basis_names) {
    if (n.empty()) throw std::invalid_argument("empty basis name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate basis name '" + n + "'");
  }
  std::shared_ptr<AlgebraDef> def(new AlgebraDef());
  def->names_ = std::move(basis_names);
  const int d = def->dim();
  def->table_.assign(static_cast<std::size_t>(d * d), {});
  std::set<std::tuple<int, int, int>> keys;
  for (const auto& sc : constants) {
    for (int i : {sc.left, sc.right, sc.result}) {
      if (i < 0 || i >= d) {
        throw std::invalid_argument("structure constant index " + idx_str(i) + " out of range");
      }
    }
    if (!keys.emplace(sc.left, sc.right, sc.result).second) {
      throw std::invalid_argument("duplicate structure constant for (" + idx_str(sc.left) + ", " +
                                  idx_str(sc.right) + ") -> " + idx_str(sc.result));
    }
    if (sgn(sc.value) == 0) continue;
    def->table_[static_cast<std::size_t>(sc.left * d + sc.right)].push_back({sc.result, sc.value});
  }
  for (auto& cell : def->table_) {
    std::sort(cell.begin(), cell.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  }
  def->id_ = next_algebra_id.fetch_add(1);
  return def;
}

std::optional<int> AlgebraDef::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<StructureConstant> AlgebraDef::structure_constants() const {
  std::vector<StructureConstant> out;
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (const auto& t : product(i, j)) out.push_back({i, j, t.index, t.coeff});
    }
  }
  return out;
}

bool operator==(const AlgebraDef& a, const AlgebraDef& b) {
  return a.names_ == b.names_ && a.structure_constants() == b.structure_constants();
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw std::invalid_argument("algebra mismatch");
}

AssociativityReport check_associativity(const AlgebraDef& def) {
  AssociativityReport report;
  const int d = def.dim();
  std::vector<Scalar> lhs(static_cast<std::size_t>(d));
  std::vector<Scalar> rhs(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar(0));
        std::fill(rhs.begin(), rhs.end(), Scalar(0));
        for (const auto& ij : def.product(i, j)) {
          for (const auto& t : def.product(ij.index, k)) lhs[static_cast<std::size_t>(t.index)] += ij.coeff * t.coeff;
        }
        for (const auto& jk : def.product(j, k)) {
          for (const auto& t : def.product(i, jk.index)) rhs[static_cast<std::size_t>(t.index)] += jk.coeff * t.coeff;
        }
        if (lhs != rhs) report.failures.push_back({i, j, k});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// AlgebraElt

AlgebraElt::AlgebraElt(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw std::invalid_argument("null algebra");
  coeffs_.assign(static_cast<std::size_t>(alg_->dim()), Scalar(0));
}

AlgebraElt AlgebraElt::basis(AlgebraPtr alg, int i) {
  AlgebraElt e(std::move(alg));
  if (i < 0 || i >= e.dim()) throw std::out_of_range("basis index out of range");
  e[i] = 1;
  return e;
}

bool AlgebraElt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

AlgebraElt& AlgebraElt::operator+=(const AlgebraElt& o) {
  require_same_algebra(alg_, o.alg_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraElt& AlgebraElt::operator-=(const AlgebraElt& o) {
  require_same_algebra(alg_, o.alg_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraElt& AlgebraElt::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const AlgebraElt& a, const AlgebraElt& b) {
  return (a.alg_ == b.alg_ || *a.alg_ == *b.alg_) && a.coeffs_ == b.coeffs_;
}

AlgebraElt mul_algebra(const AlgebraElt& a, const AlgebraElt& b) {
  require_same_algebra(a.algebra(), b.algebra());
  const AlgebraDef& def = *a.algebra();
  AlgebraElt out(a.algebra());
  for (int i = 0; i < def.dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < def.dim(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& t : def.product(i, j)) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

UnitalElt mul_unital(const UnitalElt& a, const UnitalElt& b) {
  UnitalElt out{a.unit_part * b.unit_part, mul_algebra(a.body, b.body)};
  out.body += a.unit_part * b.body;
  out.body += b.unit_part * a.body;
  return out;
}

// ---------------------------------------------------------------------------
// LegTensor

LegTensor::LegTensor(AlgebraPtr alg, int legs) : alg_(std::move(alg)), legs_(legs) {
  if (!alg_) throw std::invalid_argument("null algebra");
  if (legs_ < 1) throw std::invalid_argument("leg count must be positive");
}

LegTensor LegTensor::unit(AlgebraPtr alg, int legs) {
  LegTensor t(std::move(alg), legs);
  t.add_term(LegIndex(static_cast<std::size_t>(legs), kUnit), Scalar(1));
  return t;
}

LegTensor LegTensor::monomial(AlgebraPtr alg, LegIndex index, const Scalar& c) {
  LegTensor t(std::move(alg), static_cast<int>(index.size()));
  t.add_term(index, c);
  return t;
}

LegTensor LegTensor::from_element(const AlgebraElt& x) {
  LegTensor t(x.algebra(), 1);
  for (int i = 0; i < x.dim(); ++i) t.add_term({i}, x[i]);
  return t;
}

LegTensor LegTensor::from_terms(AlgebraPtr alg, int legs, Combination<LegIndex> terms) {
  LegTensor t(std::move(alg), legs);
  t.terms_ = std::move(terms);
  return t;
}

void LegTensor::add_term(const LegIndex& index, const Scalar& c) {
  if (static_cast<int>(index.size()) != legs_) throw std::invalid_argument("leg index has wrong length");
  for (int b : index) {
    if (b != kUnit && (b < 0 || b >= alg_->dim())) throw std::out_of_range("basis index out of range");
  }
  terms_.add(index, c);
}

bool LegTensor::in_nonunital_power() const {
  for (const auto& [idx, c] : terms_) {
    if (std::find(idx.begin(), idx.end(), kUnit) != idx.end()) return false;
  }
  return true;
}

void LegTensor::check_compatible(const LegTensor& o) const {
  require_same_algebra(alg_, o.alg_);
  if (legs_ != o.legs_) throw std::invalid_argument("leg count mismatch");
}

LegTensor& LegTensor::operator+=(const LegTensor& o) {
  check_compatible(o);
  terms_ += o.terms_;
  return *this;
}

LegTensor& LegTensor::operator-=(const LegTensor& o) {
  check_compatible(o);
  terms_ -= o.terms_;
  return *this;
}

LegTensor& LegTensor::operator*=(const Scalar& s) {
  terms_ *= s;
  return *this;
}

bool operator==(const LegTensor& a, const LegTensor& b) {
  return a.legs_ == b.legs_ && (a.alg_ == b.alg_ || *a.alg_ == *b.alg_) && a.terms_ == b.terms_;
}

LegTensor mul_leg(const LegTensor& x, const LegTensor& y) {
  require_same_algebra(x.algebra(), y.algebra());
  if (x.legs() != y.legs()) throw std::invalid_argument("leg count mismatch");
  const AlgebraDef& def = *x.algebra();
  const std::size_t p = static_cast<std::size_t>(x.legs());
  Combination<LegIndex> acc;

  // Partial products are expanded leg by leg; each leg either passes a letter
  // through (one side is the unit) or expands e_i e_j by structure constants.
  std::vector<std::pair<LegIndex, Scalar>> partial;
  std::vector<std::pair<LegIndex, Scalar>> next;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      partial.clear();
      partial.emplace_back(LegIndex(), ca * cb);
      partial.front().first.reserve(p);
      for (std::size_t leg = 0; leg < p && !partial.empty(); ++leg) {
        const int u = a[leg];
        const int v = b[leg];
        if (u == kUnit || v == kUnit) {
          const int w = (u == kUnit) ? v : u;
          for (auto& pr : partial) pr.first.push_back(w);
          continue;
        }
        const auto prod = def.product(u, v);
        next.clear();
        for (const auto& pr : partial) {
          for (const auto& t : prod) {
            LegIndex k = pr.first;
            k.push_back(t.index);
            next.emplace_back(std::move(k), pr.second * t.coeff);
          }
        }
        partial.swap(next);
      }
      for (auto& pr : partial) acc.add(std::move(pr.first), pr.second);
    }
  }
  return LegTensor::from_terms(x.algebra(), x.legs(), std::move(acc));
}

LegTensor leg_embed(const LegTensor& x, std::span<const int> positions, int p) {
  if (static_cast<int>(positions.size()) != x.legs()) {
    throw std::invalid_argument("position count does not match leg count");
  }
  std::vector<bool> used(static_cast<std::size_t>(p + 1), false);
  for (int pos : positions) {
    if (pos < 1 || pos > p) throw std::out_of_range("leg position out of range");
    if (used[static_cast<std::size_t>(pos)]) throw std::invalid_argument("repeated leg position");
    used[static_cast<std::size_t>(pos)] = true;
  }
  LegTensor out(x.algebra(), p);
  for (const auto& [idx, c] : x.terms()) {
    LegIndex k(static_cast<std::size_t>(p), kUnit);
    for (std::size_t q = 0; q < positions.size(); ++q) k[static_cast<std::size_t>(positions[q] - 1)] = idx[q];
    out.add_term(k, c);
  }
  return out;
}

LegTensor leg_embed(const LegTensor& x, std::initializer_list<int> positions, int p) {
  return leg_embed(x, std::span<const int>(positions.begin(), positions.size()), p);
}

LegTensor commutator(const LegTensor& a, const LegTensor& b) { return mul_leg(a, b) - mul_leg(b, a); }

LegTensor flip_21(const LegTensor& x) {
  if (x.legs() != 2) throw std::invalid_argument("flip_21 needs a 2-leg tensor");
  LegTensor out(x.algebra(), 2);
  for (const auto& [idx, c] : x.terms()) out.add_term({idx[1], idx[0]}, c);
  return out;
}

LegTensor nonunit_part(const LegTensor& x) {
  LegTensor out(x.algebra(), x.legs());
  for (const auto& [idx, c] : x.terms()) {
    if (std::find(idx.begin(), idx.end(), kUnit) == idx.end()) out.add_term(idx, c);
  }
  return out;
}

}  // namespace itohopf

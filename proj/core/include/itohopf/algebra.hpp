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

#ifndef ITOHOPF_ALGEBRA_HPP
#define ITOHOPF_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itohopf/combination.hpp"
#include "itohopf/scalar.hpp"

namespace itohopf {

/// One entry of the multiplication table: e_left * e_right has coefficient
/// `value` on e_result. Indices are 0-based.
struct StructureConstant {
  int left = 0;
  int right = 0;
  int result = 0;
  Scalar value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// A finite-dimensional, not necessarily unital, associative algebra given by
/// sparse structure constants over the rationals.
///
/// Construction validates indices and rejects duplicate (left, right, result)
/// entries, but does not check associativity; call check_associativity() for
/// that (the CLI always does).
class AlgebraDef {
 public:
  struct Term {
    int index;
    Scalar coeff;
  };

  static std::shared_ptr<const AlgebraDef> create(
      std::vector<std::string> basis_names,
      const std::vector<StructureConstant>& constants);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view name) const;

  /// e_i * e_j as a sparse list of basis terms (empty when the product is 0).
  std::span<const Term> product(int i, int j) const {
    return table_[static_cast<std::size_t>(i * dim() + j)];
  }

  /// Nonzero structure constants sorted by (left, right, result).
  std::vector<StructureConstant> structure_constants() const;

  /// Process-unique identity, used to key caches.
  std::uint64_t id() const { return id_; }

  friend bool operator==(const AlgebraDef& a, const AlgebraDef& b);

 private:
  AlgebraDef() = default;

  std::vector<std::string> names_;
  std::vector<std::vector<Term>> table_;
  std::uint64_t id_ = 0;
};

using AlgebraPtr = std::shared_ptr<const AlgebraDef>;

/// Throws std::invalid_argument unless the two definitions are the same
/// object or compare equal.
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct AssociativityReport {
  /// Basis triples (i, j, k), 0-based, with (e_i e_j) e_k != e_i (e_j e_k).
  std::vector<std::array<int, 3>> failures;
  bool ok() const { return failures.empty(); }
};

AssociativityReport check_associativity(const AlgebraDef& def);

/// Element of L, dense over the basis.
class AlgebraElt {
 public:
  explicit AlgebraElt(AlgebraPtr alg);
  static AlgebraElt basis(AlgebraPtr alg, int i);

  const AlgebraPtr& algebra() const { return alg_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  AlgebraElt zero_like() const { return AlgebraElt(alg_); }

  AlgebraElt& operator+=(const AlgebraElt& o);
  AlgebraElt& operator-=(const AlgebraElt& o);
  AlgebraElt& operator*=(const Scalar& s);

  friend bool operator==(const AlgebraElt& a, const AlgebraElt& b);

 private:
  AlgebraPtr alg_;
  std::vector<Scalar> coeffs_;
};

AlgebraElt mul_algebra(const AlgebraElt& a, const AlgebraElt& b);

inline AlgebraElt operator*(const AlgebraElt& a, const AlgebraElt& b) { return mul_algebra(a, b); }
inline AlgebraElt operator+(AlgebraElt a, const AlgebraElt& b) { return a += b; }
inline AlgebraElt operator-(AlgebraElt a, const AlgebraElt& b) { return a -= b; }
inline AlgebraElt operator*(const Scalar& s, AlgebraElt a) { return a *= s; }

/// Element of the unitalization L' = span{1} (+) L.
struct UnitalElt {
  Scalar unit_part;
  AlgebraElt body;

  friend bool operator==(const UnitalElt&, const UnitalElt&) = default;
};

UnitalElt mul_unital(const UnitalElt& a, const UnitalElt& b);

/// Marker for the adjoined unit in a leg of a LegTensor.
inline constexpr int kUnit = -1;

/// Per-leg basis choice: kUnit or a 0-based basis index of L.
using LegIndex = std::vector<int>;

/// Element of the p-fold tensor power of L'.
class LegTensor {
 public:
  LegTensor(AlgebraPtr alg, int legs);

  static LegTensor unit(AlgebraPtr alg, int legs);
  static LegTensor monomial(AlgebraPtr alg, LegIndex index, const Scalar& c = Scalar(1));
  /// x as a 1-leg tensor.
  static LegTensor from_element(const AlgebraElt& x);
  /// Adopts terms without validating keys.
  static LegTensor from_terms(AlgebraPtr alg, int legs, Combination<LegIndex> terms);

  const AlgebraPtr& algebra() const { return alg_; }
  int legs() const { return legs_; }
  const Combination<LegIndex>& terms() const { return terms_; }
  Scalar coeff(const LegIndex& index) const { return terms_.coeff(index); }

  void add_term(const LegIndex& index, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  LegTensor zero_like() const { return LegTensor(alg_, legs_); }
  /// True iff no term carries the unit on any leg, i.e. x lies in the
  /// tensor power of L itself.
  bool in_nonunital_power() const;

  LegTensor& operator+=(const LegTensor& o);
  LegTensor& operator-=(const LegTensor& o);
  LegTensor& operator*=(const Scalar& s);

  friend bool operator==(const LegTensor& a, const LegTensor& b);

 private:
  void check_compatible(const LegTensor& o) const;

  AlgebraPtr alg_;
  int legs_;
  Combination<LegIndex> terms_;
};

LegTensor mul_leg(const LegTensor& x, const LegTensor& y);

inline LegTensor operator*(const LegTensor& a, const LegTensor& b) { return mul_leg(a, b); }
inline LegTensor operator+(LegTensor a, const LegTensor& b) { return a += b; }
inline LegTensor operator-(LegTensor a, const LegTensor& b) { return a -= b; }
inline LegTensor operator*(const Scalar& s, LegTensor a) { return a *= s; }

/// Places x on the given legs (1-based, distinct, in the given order) of a
/// p-leg tensor, with the unit on every other leg.
LegTensor leg_embed(const LegTensor& x, std::span<const int> positions, int p);
LegTensor leg_embed(const LegTensor& x, std::initializer_list<int> positions, int p);

LegTensor commutator(const LegTensor& a, const LegTensor& b);

LegTensor flip_21(const LegTensor& x);

/// Terms whose every leg is a basis element of L (no unit legs).
LegTensor nonunit_part(const LegTensor& x);

}  // namespace itohopf

#endif  // ITOHOPF_ALGEBRA_HPP

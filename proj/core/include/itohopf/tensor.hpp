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

#ifndef ITOHOPF_TENSOR_HPP
#define ITOHOPF_TENSOR_HPP

#include <initializer_list>
#include <set>
#include <span>
#include <vector>

#include "itohopf/algebra.hpp"
#include "itohopf/combination.hpp"

namespace itohopf {

/// Sequence of 0-based basis indices of L; the empty word is the unit of T(L).
using Word = std::vector<int>;

/// One word per leg of a multi-leg tensor.
using MultiWord = std::vector<Word>;

/// Element of T(L) with the sticky-shuffle (Ito) product.
class TensorElt {
 public:
  explicit TensorElt(AlgebraPtr alg);

  static TensorElt unit(AlgebraPtr alg);
  static TensorElt word(AlgebraPtr alg, Word w, const Scalar& c = Scalar(1));
  /// x as a rank-1 tensor.
  static TensorElt from_element(const AlgebraElt& x);

  const AlgebraPtr& algebra() const { return alg_; }
  const Combination<Word>& terms() const { return terms_; }
  Scalar coeff(const Word& w) const { return terms_.coeff(w); }
  void add_term(const Word& w, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  TensorElt zero_like() const { return TensorElt(alg_); }

  /// Restriction to words of length n.
  TensorElt rank_component(int n) const;
  /// Largest word length present, or -1 for zero.
  int max_rank() const;

  TensorElt& operator+=(const TensorElt& o);
  TensorElt& operator-=(const TensorElt& o);
  TensorElt& operator*=(const Scalar& s);

  friend bool operator==(const TensorElt& a, const TensorElt& b);

 private:
  AlgebraPtr alg_;
  Combination<Word> terms_;
};

/// Sticky shuffles of two basis words. Every pair of order-preserving
/// injections of u and v into 1..p whose images cover 1..p contributes one
/// word; a slot hit by both carries the product u_i * v_j in L, expanded by
/// structure constants. Results are memoised per thread.
const Combination<Word>& sticky_shuffle(const AlgebraDef& def, const Word& u, const Word& v);

TensorElt ito_product(const TensorElt& a, const TensorElt& b);

inline TensorElt operator*(const TensorElt& a, const TensorElt& b) { return ito_product(a, b); }
inline TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }
inline TensorElt operator-(TensorElt a, const TensorElt& b) { return a -= b; }
inline TensorElt operator*(const Scalar& s, TensorElt a) { return a *= s; }

/// Coefficient of the empty word.
Scalar counit(const TensorElt& a);

/// Rank-wise average over all permutations of letters.
TensorElt symmetrize(const TensorElt& a);
bool is_symmetric(const TensorElt& a);

/// Element of the p-fold tensor power of T(L); p may be 0 (scalars).
class MultiTensorElt {
 public:
  MultiTensorElt(AlgebraPtr alg, int legs);

  static MultiTensorElt unit(AlgebraPtr alg, int legs);
  static MultiTensorElt monomial(AlgebraPtr alg, MultiWord key, const Scalar& c = Scalar(1));
  /// a as a 1-leg tensor.
  static MultiTensorElt from_tensor(const TensorElt& a);
  /// Adopts terms without validating keys; for results of operations whose
  /// keys are valid by construction.
  static MultiTensorElt from_terms(AlgebraPtr alg, int legs, Combination<MultiWord> terms);

  const AlgebraPtr& algebra() const { return alg_; }
  int legs() const { return legs_; }
  const Combination<MultiWord>& terms() const { return terms_; }
  Scalar coeff(const MultiWord& key) const { return terms_.coeff(key); }
  void add_term(const MultiWord& key, const Scalar& c);
  void add_term(MultiWord&& key, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  MultiTensorElt zero_like() const { return MultiTensorElt(alg_, legs_); }

  /// Joint ranks (word lengths per leg) present in the support.
  std::set<std::vector<int>> joint_ranks() const;

  MultiTensorElt& operator+=(const MultiTensorElt& o);
  MultiTensorElt& operator-=(const MultiTensorElt& o);
  MultiTensorElt& operator*=(const Scalar& s);

  friend bool operator==(const MultiTensorElt& a, const MultiTensorElt& b);

 private:
  void check_compatible(const MultiTensorElt& o) const;

  AlgebraPtr alg_;
  int legs_;
  Combination<MultiWord> terms_;
};

std::vector<int> joint_rank(const MultiWord& key);

/// Leg-wise sticky-shuffle product.
MultiTensorElt multi_ito_product(const MultiTensorElt& x, const MultiTensorElt& y);

inline MultiTensorElt operator*(const MultiTensorElt& a, const MultiTensorElt& b) {
  return multi_ito_product(a, b);
}
inline MultiTensorElt operator+(MultiTensorElt a, const MultiTensorElt& b) { return a += b; }
inline MultiTensorElt operator-(MultiTensorElt a, const MultiTensorElt& b) { return a -= b; }
inline MultiTensorElt operator*(const Scalar& s, MultiTensorElt a) { return a *= s; }

/// Outer tensor product: the legs of x followed by the legs of y.
MultiTensorElt tensor_product(const MultiTensorElt& x, const MultiTensorElt& y);

/// Deconcatenation coproduct.
MultiTensorElt coproduct(const TensorElt& a);

/// m-fold coproduct: all splittings of each word into m consecutive pieces.
/// m = 1 is the identity (as a 1-leg tensor), m = 0 is the counit (0 legs).
MultiTensorElt iterated_coproduct(const TensorElt& a, int m);

/// Restriction to terms of the given joint rank.
MultiTensorElt rank_project(const MultiTensorElt& x, std::span<const int> ranks);
MultiTensorElt rank_project(const MultiTensorElt& x, std::initializer_list<int> ranks);

/// Places x on the given legs (1-based, distinct) of a p-leg tensor with the
/// empty word on every other leg.
MultiTensorElt embed_multi(const MultiTensorElt& x, std::span<const int> positions, int p);
MultiTensorElt embed_multi(const MultiTensorElt& x, std::initializer_list<int> positions, int p);

/// Applies the m-fold coproduct to one leg (1-based); the result has
/// p + m - 1 legs. m = 0 applies the counit to that leg.
MultiTensorElt apply_coproduct_to_leg(const MultiTensorElt& x, int leg, int m);

MultiTensorElt flip_legs(const MultiTensorElt& x);

/// Views x in the p-fold tensor power of L' as a multi-leg element of T(L):
/// a unit leg becomes the empty word, a basis leg a one-letter word.
MultiTensorElt leg_to_multi(const LegTensor& x);

/// Leg-wise algebra map T(L) -> L' sending the empty word to 1, a one-letter
/// word to its letter and every longer word to 0. Requires at least one leg.
LegTensor multi_to_leg(const MultiTensorElt& x);

}  // namespace itohopf

#endif  // ITOHOPF_TENSOR_HPP

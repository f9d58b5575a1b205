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

#include "itohopf/prodint.hpp"

#include <stdexcept>

namespace itohopf {

MultiTensorElt to_multi(const AWordSum<TensorElt>& x, Side side) {
  MultiTensorElt out(x.zero().algebra(), 2);
  for (const auto& [w, t] : x.terms()) {
    for (const auto& [v, c] : t.terms()) {
      out.add_term(side == Side::algebra_first ? MultiWord{v, w} : MultiWord{w, v}, c);
    }
  }
  return out;
}

void check_r_series(const RSeries& r) {
  if (!r[0].is_zero()) throw std::invalid_argument("r must have zero constant term");
  for (int k = 0; k <= r.order(); ++k) {
    if (r[k].legs() != 2) throw std::invalid_argument("r must be a 2-leg tensor");
    if (!r[k].in_nonunital_power()) throw std::invalid_argument("r must lie in L (x) L (no unit legs)");
  }
}

HSeries<MultiTensorElt> double_product(const RSeries& r, Orientation orientation, Construction construction) {
  check_r_series(r);
  const AlgebraPtr& alg = r[0].algebra();
  const int n = r.order();
  const bool outer_first = construction == Construction::outer_on_first_leg;
  const bool fb = orientation == Orientation::forward_backward;
  const Direction inner_dir = (fb == outer_first) ? Direction::backward : Direction::forward;
  const Direction outer_dir = inner_dir == Direction::backward ? Direction::forward : Direction::backward;

  // The inner integral runs over the L leg opposite to the outer A leg; its
  // words live on the outer A leg.
  const std::size_t word_leg = outer_first ? 0 : 1;
  const std::size_t a_leg = 1 - word_leg;

  const AlgebraElt l_zero(alg);
  Driving<AlgebraElt> inner_drive(n, AWordSum<AlgebraElt>(l_zero));
  for (int k = 1; k <= n; ++k) {
    for (const auto& [idx, c] : r[k].terms()) {
      AlgebraElt a(alg);
      a[idx[a_leg]] = c;
      inner_drive[k].add(Word{idx[word_leg]}, a);
    }
  }
  const auto inner = detail::expand_tail(inner_drive, inner_dir);

  const TensorElt t_zero(alg);
  Driving<TensorElt> outer_drive(n, AWordSum<TensorElt>(t_zero));
  for (int k = 1; k <= n; ++k) {
    for (const auto& [w, a] : inner[k].terms()) {
      for (int j = 0; j < a.dim(); ++j) {
        if (sgn(a[j]) == 0) continue;
        outer_drive[k].add(Word{j}, TensorElt::word(alg, w, a[j]));
      }
    }
  }
  const auto outer = detail::expand_tail(outer_drive, outer_dir);

  HSeries<MultiTensorElt> out(n, MultiTensorElt(alg, 2));
  out[0] = MultiTensorElt::unit(alg, 2);
  for (int k = 1; k <= n; ++k) {
    out[k] = to_multi(outer[k], outer_first ? Side::algebra_first : Side::tensor_first);
  }
  return out;
}

namespace {

DoubleProduct build_double(const RSeries& r, Orientation o, bool cross_check) {
  auto first = double_product(r, o, Construction::outer_on_first_leg);
  if (cross_check) {
    auto second = double_product(r, o, Construction::outer_on_second_leg);
    if (!(first == second)) {
      throw std::logic_error("double product: the two iterated constructions disagree");
    }
  }
  return {o, std::move(first)};
}

}  // namespace

DoubleProduct double_fb(const RSeries& r, bool cross_check) {
  return build_double(r, Orientation::forward_backward, cross_check);
}

DoubleProduct double_bf(const RSeries& r, bool cross_check) {
  return build_double(r, Orientation::backward_forward, cross_check);
}

}  // namespace itohopf

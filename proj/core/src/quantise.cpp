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

#include "itohopf/quantise.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace itohopf {

namespace {

using MSeries = HSeries<MultiTensorElt>;

MSeries embed(const MSeries& x, std::initializer_list<int> positions, int p) {
  MSeries out(x.order(), MultiTensorElt(x[0].algebra(), p));
  for (int k = 0; k <= x.order(); ++k) out[k] = embed_multi(x[k], positions, p);
  return out;
}

MSeries coproduct_on_leg(const MSeries& x, int leg, int m) {
  MSeries out(x.order(), MultiTensorElt(x[0].algebra(), x[0].legs() + m - 1));
  for (int k = 0; k <= x.order(); ++k) out[k] = apply_coproduct_to_leg(x[k], leg, m);
  return out;
}

MSeries constant(int order, const MultiTensorElt& c) { return MSeries::constant(order, c); }

LegTensor leg_mul(const LegTensor& a, const LegTensor& b) { return a * b; }

// Placements of the words of a with at most p letters on p legs, one letter
// per chosen leg in order, unit elsewhere.
LegTensor placements(const TensorElt& a, int p) {
  LegTensor out(a.algebra(), p);
  for (const auto& [w, c] : a.terms()) {
    const int len = static_cast<int>(w.size());
    if (len > p) continue;
    std::vector<bool> chosen(static_cast<std::size_t>(p), false);
    std::fill(chosen.end() - len, chosen.end(), true);
    do {
      LegIndex idx(static_cast<std::size_t>(p), kUnit);
      std::size_t letter = 0;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i]) idx[i] = w[letter++];
      }
      out.add_term(idx, c);
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  return out;
}

}  // namespace

QuantisationContext build_context(const RSeries& r, bool verify) {
  check_r_series(r);
  auto r_prime = quasi_inverse(r, leg_mul);
  auto r_matrix = double_fb(r).series;
  auto r_matrix_inverse = double_bf(r_prime).series;
  QuantisationContext ctx{r[0].algebra(), r.order(), r, std::move(r_prime), std::move(r_matrix),
                          std::move(r_matrix_inverse)};
  if (verify && !check_inverse(ctx).ok()) {
    throw std::logic_error("build_context: R and its reversed double product are not mutually inverse");
  }
  return ctx;
}

InverseReport check_inverse(const QuantisationContext& ctx) {
  InverseReport rep;
  const auto zero = ctx.r.zero_like();
  rep.quasi_inverse_left = ctx.r + ctx.r_prime + series_mul(ctx.r, ctx.r_prime, leg_mul) == zero;
  rep.quasi_inverse_right = ctx.r + ctx.r_prime + series_mul(ctx.r_prime, ctx.r, leg_mul) == zero;
  const auto unit = MultiTensorElt::unit(ctx.algebra, 2);
  const auto one = constant(ctx.order, unit);
  rep.right_inverse = ctx.r_matrix * ctx.r_matrix_inverse == one;
  rep.left_inverse = ctx.r_matrix_inverse * ctx.r_matrix == one;
  rep.matches_series_invert = series_invert(ctx.r_matrix, unit) == ctx.r_matrix_inverse;
  return rep;
}

bool QuasitriangularityReport::ok() const {
  bool all = coproduct_first.holds && coproduct_second.holds && inverse_coproduct_first.holds &&
             inverse_coproduct_second.holds;
  for (const auto& e : grid) all = all && e.report.holds;
  return all;
}

MSeries r_matrix_grid(const MSeries& r_matrix, int m, int n) {
  const int p = m + n;
  auto out = constant(r_matrix.order(), MultiTensorElt::unit(r_matrix[0].algebra(), p));
  for (const auto& [a, b] : grid_legs(m, n, 0, p, GridOrder::rows_first)) out = out * embed(r_matrix, {a, b}, p);
  return out;
}

QuasitriangularityReport quasitriangularity_check(const QuantisationContext& ctx, int max_grid) {
  const auto& big_r = ctx.r_matrix;
  const auto& inv = ctx.r_matrix_inverse;
  QuasitriangularityReport rep;
  rep.coproduct_first = compare_series(coproduct_on_leg(big_r, 1, 2), embed(big_r, {1, 3}, 3) * embed(big_r, {2, 3}, 3));
  rep.coproduct_second = compare_series(coproduct_on_leg(big_r, 2, 2), embed(big_r, {1, 3}, 3) * embed(big_r, {1, 2}, 3));
  rep.inverse_coproduct_first = compare_series(coproduct_on_leg(inv, 1, 2), embed(inv, {2, 3}, 3) * embed(inv, {1, 3}, 3));
  rep.inverse_coproduct_second = compare_series(coproduct_on_leg(inv, 2, 2), embed(inv, {1, 2}, 3) * embed(inv, {1, 3}, 3));
  for (int m = 1; m <= max_grid; ++m) {
    for (int n = 1; n <= max_grid; ++n) {
      const auto lhs = coproduct_on_leg(coproduct_on_leg(big_r, 2, n), 1, m);
      rep.grid.push_back({m, n, compare_series(lhs, r_matrix_grid(big_r, m, n))});
    }
  }
  return rep;
}

std::vector<std::pair<int, int>> DeformedCoproduct::joint_ranks() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& c : series_.coefficients()) {
    for (const auto& jr : c.joint_ranks()) seen.emplace(jr[0], jr[1]);
  }
  return {seen.begin(), seen.end()};
}

MSeries DeformedCoproduct::component(int m, int n) const {
  MSeries out = series_.zero_like();
  for (int k = 0; k <= series_.order(); ++k) out[k] = rank_project(series_[k], {m, n});
  return out;
}

int deformed_rank_bound(const QuantisationContext& ctx, const TensorElt& a) {
  return std::max(a.max_rank(), 0) + 2 * ctx.order;
}

DeformedCoproduct deformed_coproduct(const QuantisationContext& ctx, const TensorElt& a, int cross_check_max_total) {
  require_same_algebra(ctx.algebra, a.algebra());
  DeformedCoproduct out(ctx.r_matrix * constant(ctx.order, coproduct(a)) * ctx.r_matrix_inverse);
  if (!is_symmetric(a)) out.warnings.emplace_back("argument is not a symmetric tensor");
  if (cross_check_max_total >= 0) {
    const int limit = std::min(cross_check_max_total, deformed_rank_bound(ctx, a));
    for (int total = 0; total <= limit; ++total) {
      for (int m = 0; m <= total; ++m) {
        if (!(deformed_component_by_grid(ctx, a, m, total - m) == out.component(m, total - m))) {
          throw std::logic_error("deformed_coproduct: grid computation disagrees at joint rank (" +
                                 std::to_string(m) + ", " + std::to_string(total - m) + ")");
        }
      }
    }
  }
  return out;
}

MSeries deformed_component_by_grid(const QuantisationContext& ctx, const TensorElt& a, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("deformed_component_by_grid: negative rank");
  require_same_algebra(ctx.algebra, a.algebra());
  const int p = m + n;
  MSeries out(ctx.order, MultiTensorElt(ctx.algebra, 2));
  if (p == 0) {
    out[0].add_term(MultiWord{{}, {}}, counit(a));
    return out;
  }
  std::vector<std::pair<int, int>> forward = grid_legs(m, n, 0, p, GridOrder::rows_first);
  std::vector<std::pair<int, int>> backward;
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= n; ++k) backward.emplace_back(m + 1 - j, m + k);
  }
  const auto middle = HSeries<LegTensor>::constant(ctx.order, placements(a, p));
  const auto product = ordered_leg_product(unitalize(ctx.r), forward, p) * middle *
                       ordered_leg_product(unitalize(ctx.r_prime), backward, p);
  for (int k = 0; k <= ctx.order; ++k) {
    Combination<MultiWord> terms;
    const LegTensor body = nonunit_part(product[k]);
    for (const auto& [idx, c] : body.terms()) {
      terms.add(MultiWord{Word(idx.begin(), idx.begin() + m), Word(idx.begin() + m, idx.end())}, c);
    }
    out[k] = MultiTensorElt::from_terms(ctx.algebra, 2, std::move(terms));
  }
  return out;
}

YbeReport coassociativity_check(const QuantisationContext& ctx, const TensorElt& a) {
  const auto d = deformed_coproduct(ctx, a).series();
  const auto& big_r = ctx.r_matrix;
  const auto& inv = ctx.r_matrix_inverse;
  const auto lhs = embed(big_r, {1, 2}, 3) * coproduct_on_leg(d, 1, 2) * embed(inv, {1, 2}, 3);
  const auto rhs = embed(big_r, {2, 3}, 3) * coproduct_on_leg(d, 2, 2) * embed(inv, {2, 3}, 3);
  return compare_series(lhs, rhs);
}

LegTensor cobracket_closed_form(const LegTensor& r1, const AlgebraElt& x) {
  const auto lx = LegTensor::from_element(x);
  const auto prim = leg_embed(lx, {1}, 2) + leg_embed(lx, {2}, 2);
  return commutator(r1 - flip_21(r1), prim);
}

LegTensor cobracket(const QuantisationContext& ctx, const AlgebraElt& x) {
  require_same_algebra(ctx.algebra, x.algebra());
  if (ctx.order < 1) throw std::invalid_argument("cobracket: truncation order must be at least 1");
  const auto d = truncate(ctx.r_matrix, 1) * constant(1, coproduct(TensorElt::from_element(x))) *
                 truncate(ctx.r_matrix_inverse, 1);
  const auto first = rank_project(d[1] - flip_legs(d[1]), {1, 1});
  const LegTensor extracted = nonunit_part(multi_to_leg(first));
  if (!(extracted == cobracket_closed_form(ctx.r[1], x))) {
    throw std::logic_error("cobracket: extraction disagrees with the closed form");
  }
  return extracted;
}

}  // namespace itohopf

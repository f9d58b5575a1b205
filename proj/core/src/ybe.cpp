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

#include "itohopf/ybe.hpp"

#include <map>
#include <stdexcept>

#include "itohopf/linsolve.hpp"

namespace itohopf {

namespace {

YbeReport report_difference(int order, const MultiTensorElt& diff) {
  YbeReport rep;
  rep.holds = false;
  rep.order = order;
  rep.joint_rank = *diff.joint_ranks().begin();
  rep.residual = rank_project(diff, rep.joint_rank);
  return rep;
}

HSeries<MultiTensorElt> embed_multi_series(const HSeries<MultiTensorElt>& x, int a, int b, int p) {
  HSeries<MultiTensorElt> out(x.order(), MultiTensorElt(x[0].algebra(), p));
  for (int k = 0; k <= x.order(); ++k) out[k] = embed_multi(x[k], {a, b}, p);
  return out;
}

LegTensor embed3(const LegTensor& x, int a, int b) { return leg_embed(x, {a, b}, 3); }

}  // namespace

YbeReport compare_series(const HSeries<MultiTensorElt>& lhs, const HSeries<MultiTensorElt>& rhs) {
  const auto diff = lhs - rhs;
  for (int k = 0; k <= diff.order(); ++k) {
    if (!diff[k].is_zero()) return report_difference(k, diff[k]);
  }
  return {};
}

YbeReport compare_series(const HSeries<LegTensor>& lhs, const HSeries<LegTensor>& rhs) {
  const auto diff = lhs - rhs;
  for (int k = 0; k <= diff.order(); ++k) {
    if (!diff[k].is_zero()) return report_difference(k, leg_to_multi(diff[k]));
  }
  return {};
}

LegTensor cybe_expression(const LegTensor& r1) {
  if (r1.legs() != 2) throw std::invalid_argument("cybe: r1 must have two legs");
  const auto r12 = embed3(r1, 1, 2);
  const auto r13 = embed3(r1, 1, 3);
  const auto r23 = embed3(r1, 2, 3);
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

YbeReport cybe_check(const LegTensor& r1) {
  const auto e = cybe_expression(r1);
  if (e.is_zero()) return {};
  return report_difference(2, leg_to_multi(e));
}

HSeries<LegTensor> unitalize(const RSeries& r) {
  HSeries<LegTensor> out = r;
  out[0] += LegTensor::unit(r[0].algebra(), r[0].legs());
  return out;
}

HSeries<LegTensor> embed_series(const HSeries<LegTensor>& x, int a, int b, int p) {
  HSeries<LegTensor> out(x.order(), LegTensor(x[0].algebra(), p));
  for (int k = 0; k <= x.order(); ++k) out[k] = leg_embed(x[k], {a, b}, p);
  return out;
}

ToyQybeSides toy_qybe_sides(const RSeries& r) {
  check_r_series(r);
  const auto r12 = embed_series(r, 1, 2, 3);
  const auto r13 = embed_series(r, 1, 3, 3);
  const auto r23 = embed_series(r, 2, 3, 3);
  const auto one = HSeries<LegTensor>::constant(r.order(), LegTensor::unit(r[0].algebra(), 3));
  const auto p12 = one + r12;
  const auto p13 = one + r13;
  const auto p23 = one + r23;
  return {
      p12 * p13 * p23,
      p23 * p13 * p12,
      r12 * r13 + r12 * r23 + r13 * r23 + r12 * r13 * r23,
      r13 * r12 + r23 * r12 + r23 * r13 + r23 * r13 * r12,
  };
}

YbeReport toy_qybe_check(const RSeries& r) {
  const auto s = toy_qybe_sides(r);
  if (!(s.lhs - s.rhs == s.condition_lhs - s.condition_rhs)) {
    throw std::logic_error("toy_qybe: unital and expanded forms disagree");
  }
  return compare_series(s.lhs, s.rhs);
}

HSeries<LegTensor> ordered_leg_product(const HSeries<LegTensor>& rho,
                                       std::span<const std::pair<int, int>> legs, int p) {
  auto out = HSeries<LegTensor>::constant(rho.order(), LegTensor::unit(rho[0].algebra(), p));
  for (const auto& [a, b] : legs) out = out * embed_series(rho, a, b, p);
  return out;
}

std::vector<std::pair<int, int>> grid_legs(int m, int n, int a_offset, int b_top, GridOrder order) {
  if (m < 0 || n < 0) throw std::invalid_argument("grid: negative size");
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m * n));
  if (order == GridOrder::rows_first) {
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= n; ++k) out.emplace_back(a_offset + j, b_top + 1 - k);
    }
  } else {
    for (int k = 1; k <= n; ++k) {
      for (int j = 1; j <= m; ++j) out.emplace_back(a_offset + j, b_top + 1 - k);
    }
  }
  return out;
}

HSeries<LegTensor> grid_product(const HSeries<LegTensor>& rho, int m, int n, GridOrder order) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid_product: m and n must be at least 1");
  if (rho[0].legs() != 2) throw std::invalid_argument("grid_product: rho must have two legs");
  const auto legs = grid_legs(m, n, 0, m + n, order);
  return ordered_leg_product(rho, legs, m + n);
}

YbeReport braces_check(const HSeries<LegTensor>& rho, int m, int n, int p) {
  if (m < 1 || n < 1 || p < 1) throw std::invalid_argument("braces_check: m, n, p must be at least 1");
  if (rho[0].legs() != 2) throw std::invalid_argument("braces_check: rho must have two legs");
  const int total = m + n + p;
  const auto a = grid_legs(m, n, 0, m + n, GridOrder::rows_first);
  const auto b = grid_legs(m, p, 0, total, GridOrder::rows_first);
  const auto c = grid_legs(n, p, m, total, GridOrder::rows_first);
  std::vector<std::pair<int, int>> abc;
  std::vector<std::pair<int, int>> cba;
  for (const auto* block : {&a, &b, &c}) abc.insert(abc.end(), block->begin(), block->end());
  for (const auto* block : {&c, &b, &a}) cba.insert(cba.end(), block->begin(), block->end());
  return compare_series(ordered_leg_product(rho, abc, total), ordered_leg_product(rho, cba, total));
}

YbeReport qybe_check(const HSeries<MultiTensorElt>& r_matrix) {
  const AlgebraPtr& alg = r_matrix[0].algebra();
  if (r_matrix[0].legs() != 2 || !(r_matrix[0] == MultiTensorElt::unit(alg, 2))) {
    throw std::invalid_argument("qybe_check: constant term must be the unit of T(L) (x) T(L)");
  }
  const auto r12 = embed_multi_series(r_matrix, 1, 2, 3);
  const auto r13 = embed_multi_series(r_matrix, 1, 3, 3);
  const auto r23 = embed_multi_series(r_matrix, 2, 3, 3);
  return compare_series(r12 * r13 * r23, r23 * r13 * r12);
}

LegTensor hierarchy_residual(std::span<const LegTensor> r, int n) {
  if (n < 1) throw std::invalid_argument("hierarchy_residual: order must be at least 1");
  if (static_cast<int>(r.size()) < n) throw std::invalid_argument("hierarchy_residual: missing coefficients");
  for (const auto& x : r) {
    if (x.legs() != 2) throw std::invalid_argument("hierarchy_residual: coefficients must have two legs");
  }
  const AlgebraPtr& alg = r.front().algebra();
  auto at = [&](int k, int a, int b) { return embed3(r[static_cast<std::size_t>(k - 1)], a, b); };
  LegTensor out(alg, 3);
  for (int s = 1; s <= n; ++s) {
    const int t = n + 1 - s;
    out += commutator(at(s, 1, 2), at(t, 1, 3));
    out += commutator(at(s, 1, 2), at(t, 2, 3));
    out += commutator(at(s, 1, 3), at(t, 2, 3));
  }
  for (int s = 1; s <= n; ++s) {
    for (int t = 1; s + t <= n; ++t) {
      const int u = n + 1 - s - t;
      out += at(s, 1, 2) * at(t, 1, 3) * at(u, 2, 3);
      out -= at(u, 2, 3) * at(t, 1, 3) * at(s, 1, 2);
    }
  }
  return out;
}

bool SolutionSet::contains(const LegTensor& x) const {
  std::vector<LegTensor> all = prefix;
  all.push_back(x);
  return hierarchy_residual(all, n).is_zero();
}

SolutionSet hierarchy_solve(std::span<const LegTensor> r) {
  if (r.empty()) throw std::invalid_argument("hierarchy_solve: r_1 is required");
  const int big_n = static_cast<int>(r.size()) + 1;
  const AlgebraPtr& alg = r.front().algebra();
  const int d = alg->dim();

  SolutionSet out;
  out.n = big_n;
  out.prefix.assign(r.begin(), r.end());

  std::vector<LegTensor> with_zero = out.prefix;
  with_zero.emplace_back(alg, 2);
  const LegTensor inhomogeneous = hierarchy_residual(with_zero, big_n);

  const auto r12 = embed3(r.front(), 1, 2);
  const auto r13 = embed3(r.front(), 1, 3);
  const auto r23 = embed3(r.front(), 2, 3);
  auto linear_part = [&](const LegTensor& x) {
    const auto x12 = embed3(x, 1, 2);
    const auto x13 = embed3(x, 1, 3);
    const auto x23 = embed3(x, 2, 3);
    return commutator(x12, r13) + commutator(r12, x13) + commutator(x12, r23) + commutator(r12, x23) +
           commutator(x13, r23) + commutator(r13, x23);
  };

  // Column (i, j) holds the image of e_i (x) e_j; rows are the 3-leg basis
  // keys met along the way.
  std::vector<LegTensor> images;
  std::map<LegIndex, std::size_t> row_of;
  for (const auto& [key, c] : inhomogeneous.terms()) row_of.emplace(key, row_of.size());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      images.push_back(linear_part(LegTensor::monomial(alg, {i, j})));
      for (const auto& [key, c] : images.back().terms()) row_of.emplace(key, row_of.size());
    }
  }
  const std::size_t cols = static_cast<std::size_t>(d * d);
  std::vector<std::vector<Scalar>> a(row_of.size(), std::vector<Scalar>(cols, Scalar(0)));
  std::vector<Scalar> b(row_of.size(), Scalar(0));
  for (std::size_t col = 0; col < cols; ++col) {
    for (const auto& [key, c] : images[col].terms()) a[row_of.at(key)][col] = c;
  }
  for (const auto& [key, c] : inhomogeneous.terms()) b[row_of.at(key)] = -c;

  const LinearSolution sol = solve_linear(a, b, cols);
  if (!sol.consistent) return out;
  out.consistent = true;

  auto to_tensor = [&](const std::vector<Scalar>& v) {
    LegTensor x(alg, 2);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) x.add_term({i, j}, v[static_cast<std::size_t>(i * d + j)]);
    }
    return x;
  };
  out.particular = to_tensor(sol.particular);
  for (const auto& v : sol.kernel) out.kernel.push_back(to_tensor(v));
  if (!out.contains(*out.particular)) {
    throw std::logic_error("hierarchy_solve: particular solution does not satisfy the equation");
  }
  return out;
}

}  // namespace itohopf

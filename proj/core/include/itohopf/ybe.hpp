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

#ifndef ITOHOPF_YBE_HPP
#define ITOHOPF_YBE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "itohopf/algebra.hpp"
#include "itohopf/hseries.hpp"
#include "itohopf/prodint.hpp"
#include "itohopf/tensor.hpp"

namespace itohopf {

/// Outcome of comparing two sides of an identity. On failure, `order` is the
/// lowest h-order with a nonzero difference, `joint_rank` the smallest joint
/// rank present in that difference and `residual` its component there.
/// Elements of tensor powers of L' are reported through leg_to_multi, so a
/// unit leg has rank 0.
struct YbeReport {
  bool holds = true;
  int order = -1;
  std::vector<int> joint_rank;
  std::optional<MultiTensorElt> residual;
};

YbeReport compare_series(const HSeries<MultiTensorElt>& lhs, const HSeries<MultiTensorElt>& rhs);
YbeReport compare_series(const HSeries<LegTensor>& lhs, const HSeries<LegTensor>& rhs);

/// [r^{12}, r^{13}] + [r^{12}, r^{23}] + [r^{13}, r^{23}].
LegTensor cybe_expression(const LegTensor& r1);

/// Checks the classical equation; a failure is reported at h-order 2, where it
/// first shows up for r = h r1.
YbeReport cybe_check(const LegTensor& r1);

/// 1 + r as a series over the tensor square of L'.
HSeries<LegTensor> unitalize(const RSeries& r);

/// Embeds a 2-leg series on legs (a, b) of p.
HSeries<LegTensor> embed_series(const HSeries<LegTensor>& x, int a, int b, int p);

struct ToyQybeSides {
  /// (1 + r^{12})(1 + r^{13})(1 + r^{23}) and the reversed product.
  HSeries<LegTensor> lhs;
  HSeries<LegTensor> rhs;
  /// r^{12}r^{13} + r^{12}r^{23} + r^{13}r^{23} + r^{12}r^{13}r^{23} and the
  /// mirror sum with every product reversed.
  HSeries<LegTensor> condition_lhs;
  HSeries<LegTensor> condition_rhs;
};

ToyQybeSides toy_qybe_sides(const RSeries& r);

/// Quantum Yang-Baxter equation for 1 + r over L'. Throws std::logic_error if
/// the unital and expanded forms do not have identical differences.
YbeReport toy_qybe_check(const RSeries& r);

/// Ordered product rho^{a_1 b_1} rho^{a_2 b_2} ... over p legs (1-based).
HSeries<LegTensor> ordered_leg_product(const HSeries<LegTensor>& rho,
                                       std::span<const std::pair<int, int>> legs, int p);

/// Factor order for a grid over (j, k) in 1..m x 1..n.
enum class GridOrder {
  /// j outer, k inner.
  rows_first,
  /// k outer, j inner.
  columns_first,
};

/// Leg pairs (a_offset + j, b_top + 1 - k) of an m x n grid in the given order.
std::vector<std::pair<int, int>> grid_legs(int m, int n, int a_offset, int b_top, GridOrder order);

/// Product of rho^{j, m+n+1-k} over the m x n grid, in m + n legs.
HSeries<LegTensor> grid_product(const HSeries<LegTensor>& rho, int m, int n, GridOrder order);

/// Compares, in m + n + p legs, the product of the grid blocks
///   A: rho^{j, m+n+1-k},  B: rho^{j, m+n+p+1-l},  C: rho^{m+k, m+n+p+1-l}
/// taken as A B C against C B A.
YbeReport braces_check(const HSeries<LegTensor>& rho, int m, int n, int p);

/// R^{12} R^{13} R^{23} against R^{23} R^{13} R^{12}. R must have constant
/// term 1 (x) 1.
YbeReport qybe_check(const HSeries<MultiTensorElt>& r_matrix);

/// Left-hand side of the order-(n+1) equation of the hierarchy: the sum over
/// s + t = n + 1 of the three commutators of r_s, r_t plus the sum over
/// s + t + u = n + 1 of r_s^{12} r_t^{13} r_u^{23} - r_u^{23} r_t^{13} r_s^{12}.
/// r[k - 1] holds r_k; at least n coefficients are required.
LegTensor hierarchy_residual(std::span<const LegTensor> r, int n);

/// Affine space of r_N solving the order-(N+1) hierarchy equation, given
/// r_1 .. r_{N-1}.
struct SolutionSet {
  int n = 0;
  bool consistent = false;
  std::optional<LegTensor> particular;
  std::vector<LegTensor> kernel;
  /// r_1 .. r_{N-1}
  std::vector<LegTensor> prefix;

  /// True iff x makes the residual vanish.
  bool contains(const LegTensor& x) const;
};

/// Solves for r_N with N = r.size() + 1 >= 2. The unknown enters linearly via
///   [x^{12}, r_1^{13}] + [r_1^{12}, x^{13}] + [x^{12}, r_1^{23}]
///   + [r_1^{12}, x^{23}] + [x^{13}, r_1^{23}] + [r_1^{13}, x^{23}];
/// the remaining terms form the inhomogeneous part. The particular solution
/// is verified by substitution (std::logic_error on mismatch).
SolutionSet hierarchy_solve(std::span<const LegTensor> r);

}  // namespace itohopf

#endif  // ITOHOPF_YBE_HPP

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

#ifndef ITOHOPF_QUANTISE_HPP
#define ITOHOPF_QUANTISE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "itohopf/prodint.hpp"
#include "itohopf/tensor.hpp"
#include "itohopf/ybe.hpp"

namespace itohopf {

/// r, its quasi-inverse r', R = ->  <- (1 + dr) and R^{-1} = <-  -> (1 + dr').
struct QuantisationContext {
  AlgebraPtr algebra;
  int order = 0;
  RSeries r;
  RSeries r_prime;
  HSeries<MultiTensorElt> r_matrix;
  HSeries<MultiTensorElt> r_matrix_inverse;
};

struct InverseReport {
  bool quasi_inverse_left = false;   // r + r' + r r' = 0
  bool quasi_inverse_right = false;  // r + r' + r' r = 0
  bool right_inverse = false;        // R R^{-1} = 1
  bool left_inverse = false;         // R^{-1} R = 1
  bool matches_series_invert = false;

  bool ok() const {
    return quasi_inverse_left && quasi_inverse_right && right_inverse && left_inverse && matches_series_invert;
  }
};

/// Builds both double products. With verify, throws std::logic_error unless
/// check_inverse passes.
QuantisationContext build_context(const RSeries& r, bool verify = true);

InverseReport check_inverse(const QuantisationContext& ctx);

struct HippoEntry {
  int m;
  int n;
  YbeReport report;
};

struct QuasitriangularityReport {
  YbeReport coproduct_first;          // (D (x) id) R = R^{13} R^{23}
  YbeReport coproduct_second;         // (id (x) D) R = R^{13} R^{12}
  YbeReport inverse_coproduct_first;  // (D (x) id) R^{-1} = (R^{23})^{-1} (R^{13})^{-1}
  YbeReport inverse_coproduct_second; // (id (x) D) R^{-1} = (R^{12})^{-1} (R^{13})^{-1}
  std::vector<HippoEntry> grid;       // (D^(m) (x) D^(n)) R = grid product of R

  bool ok() const;
};

/// Runs the four identities and the grid identity for 1 <= m, n <= max_grid.
QuasitriangularityReport quasitriangularity_check(const QuantisationContext& ctx, int max_grid = 3);

/// Right-hand side of the grid identity: the product of R^{j, m+n+1-k} with
/// j outer and k inner, in m + n legs.
HSeries<MultiTensorElt> r_matrix_grid(const HSeries<MultiTensorElt>& r_matrix, int m, int n);

/// R D(a) R^{-1}, with access by joint rank.
class DeformedCoproduct {
 public:
  explicit DeformedCoproduct(HSeries<MultiTensorElt> series) : series_(std::move(series)) {}

  const HSeries<MultiTensorElt>& series() const { return series_; }
  /// Joint ranks (m, n) present at some order.
  std::vector<std::pair<int, int>> joint_ranks() const;
  /// The series restricted to joint rank (m, n).
  HSeries<MultiTensorElt> component(int m, int n) const;

  /// Notes produced while computing (for example, a lying outside S(L)).
  std::vector<std::string> warnings;

 private:
  HSeries<MultiTensorElt> series_;
};

/// Largest total rank m + n with a nonzero component; bounded by
/// rank(a) + 2 N because R and R^{-1} have per-leg rank at most their h-order.
int deformed_rank_bound(const QuantisationContext& ctx, const TensorElt& a);

/// Computes R D(a) R^{-1}. When cross_check_max_total >= 0, every joint rank
/// (m, n) with m + n <= cross_check_max_total is also computed by
/// deformed_component_by_grid and compared (std::logic_error on mismatch).
/// A value of -1 disables the comparison.
DeformedCoproduct deformed_coproduct(const QuantisationContext& ctx, const TensorElt& a,
                                     int cross_check_max_total = -1);

/// Joint-rank (m, n) component computed in the (m + n)-fold tensor power of
/// L': the grid of (1 + r) factors, the one-letter-per-leg placements of a,
/// then the reversed grid of (1 + r') factors, keeping only terms without a
/// unit leg.
HSeries<MultiTensorElt> deformed_component_by_grid(const QuantisationContext& ctx, const TensorElt& a, int m,
                                                   int n);

/// (D[h] (x) id) D[h](a) against (id (x) D[h]) D[h](a), each side formed by
/// conjugating the undeformed coproduct of one leg by R on the matching pair.
YbeReport coassociativity_check(const QuantisationContext& ctx, const TensorElt& a);

/// h^1 coefficient of D[h](x) - flip D[h](x) at joint rank (1, 1), as a
/// 2-leg tensor over L. Throws std::logic_error if it differs from
/// [r_1 - flip(r_1), x (x) 1 + 1 (x) x].
LegTensor cobracket(const QuantisationContext& ctx, const AlgebraElt& x);

/// [r_1 - flip(r_1), x (x) 1 + 1 (x) x]
LegTensor cobracket_closed_form(const LegTensor& r1, const AlgebraElt& x);

}  // namespace itohopf

#endif  // ITOHOPF_QUANTISE_HPP

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

#ifndef ITOHOPF_LINSOLVE_HPP
#define ITOHOPF_LINSOLVE_HPP

#include <cstddef>
#include <vector>

#include "itohopf/scalar.hpp"

namespace itohopf {

/// Affine solution set of A x = b over the rationals.
struct LinearSolution {
  bool consistent = false;
  /// Solution with every free variable set to zero (empty if inconsistent).
  std::vector<Scalar> particular;
  /// Basis of the null space of A, one vector per free variable.
  std::vector<std::vector<Scalar>> kernel;
};

/// Solves A x = b exactly. Each row is scaled to integers and reduced by
/// fraction-free (Bareiss) elimination; back substitution is rational.
/// A is rows x cols with every row of length cols; b has one entry per row.
LinearSolution solve_linear(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b);
/// As above with the column count given, so A may have no rows.
LinearSolution solve_linear(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                            std::size_t cols);

}  // namespace itohopf

#endif  // ITOHOPF_LINSOLVE_HPP

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

#ifndef ITOHOPF_RANDOM_HPP
#define ITOHOPF_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "itohopf/algebra.hpp"
#include "itohopf/prodint.hpp"
#include "itohopf/tensor.hpp"

namespace itohopf {

// Seeded generators for randomized checks. Only raw mt19937_64 output is
// used (no standard distributions), so sequences are identical on every
// platform.

using Rng = std::mt19937_64;

/// Uniform integer in [0, n).
int uniform_below(Rng& rng, int n);

/// p / q with |p| <= max_abs and 1 <= q <= max_den.
Scalar random_scalar(Rng& rng, int max_abs = 3, int max_den = 2);
Scalar random_nonzero_scalar(Rng& rng, int max_abs = 3, int max_den = 2);

AlgebraElt random_element(const AlgebraPtr& alg, Rng& rng);

/// Up to max_terms random terms with no unit legs.
LegTensor random_leg_tensor(const AlgebraPtr& alg, int legs, Rng& rng, int max_terms = 3);

/// r with a nonzero h^1 coefficient and, at each higher order, random terms
/// with probability 1/2.
RSeries random_r_series(const AlgebraPtr& alg, int order, Rng& rng, int max_terms = 3);

/// Random element of T(L) with words of length <= max_rank.
TensorElt random_tensor(const AlgebraPtr& alg, int max_rank, Rng& rng, int max_terms = 4);

/// The algebra with basis L, K and LK = L, K^2 = K, L^2 = KL = 0.
AlgebraPtr example_algebra();
/// L (x) K - K (x) L.
LegTensor example_r1(const AlgebraPtr& alg);

/// A random 2-dimensional associative algebra: one of several structure
/// families (chosen by the generator) written in a random rational basis.
/// Always passes check_associativity.
AlgebraPtr random_algebra_2d(Rng& rng);

/// r solving the quantum Yang-Baxter condition through `order`: r_1 is
/// `seed` when given and otherwise c a (x) a for random a and c; each later
/// r_N is the hierarchy's particular solution plus a random kernel
/// combination. Returns nullopt if some order is inconsistent.
std::optional<RSeries> random_hierarchy_solution(const AlgebraPtr& alg, int order, Rng& rng,
                                                 std::optional<LegTensor> seed = std::nullopt);

}  // namespace itohopf

#endif  // ITOHOPF_RANDOM_HPP

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

#include "itohopf/random.hpp"

#include <array>
#include <stdexcept>

#include "itohopf/ybe.hpp"

namespace itohopf {

int uniform_below(Rng& rng, int n) {
  if (n <= 0) throw std::invalid_argument("uniform_below: n must be positive");
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

Scalar random_scalar(Rng& rng, int max_abs, int max_den) {
  const long num = uniform_below(rng, 2 * max_abs + 1) - max_abs;
  const long den = uniform_below(rng, max_den) + 1;
  return make_scalar(num, den);
}

Scalar random_nonzero_scalar(Rng& rng, int max_abs, int max_den) {
  while (true) {
    Scalar s = random_scalar(rng, max_abs, max_den);
    if (sgn(s) != 0) return s;
  }
}

AlgebraElt random_element(const AlgebraPtr& alg, Rng& rng) {
  AlgebraElt a(alg);
  for (int i = 0; i < alg->dim(); ++i) a[i] = random_scalar(rng);
  return a;
}

LegTensor random_leg_tensor(const AlgebraPtr& alg, int legs, Rng& rng, int max_terms) {
  LegTensor x(alg, legs);
  const int terms = 1 + uniform_below(rng, max_terms);
  for (int t = 0; t < terms; ++t) {
    LegIndex idx(static_cast<std::size_t>(legs));
    for (auto& i : idx) i = uniform_below(rng, alg->dim());
    x.add_term(idx, random_nonzero_scalar(rng));
  }
  return x;
}

RSeries random_r_series(const AlgebraPtr& alg, int order, Rng& rng, int max_terms) {
  RSeries r(order, LegTensor(alg, 2));
  for (int k = 1; k <= order; ++k) {
    if (k > 1 && uniform_below(rng, 2) == 0) continue;
    do {
      r[k] = random_leg_tensor(alg, 2, rng, max_terms);
    } while (k == 1 && r[k].is_zero());
  }
  return r;
}

TensorElt random_tensor(const AlgebraPtr& alg, int max_rank, Rng& rng, int max_terms) {
  TensorElt a(alg);
  const int terms = 1 + uniform_below(rng, max_terms);
  for (int t = 0; t < terms; ++t) {
    Word w(static_cast<std::size_t>(uniform_below(rng, max_rank + 1)));
    for (auto& i : w) i = uniform_below(rng, alg->dim());
    a.add_term(w, random_nonzero_scalar(rng));
  }
  return a;
}

AlgebraPtr example_algebra() { return AlgebraDef::create({"L", "K"}, {{0, 1, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}}); }

LegTensor example_r1(const AlgebraPtr& alg) {
  LegTensor r(alg, 2);
  r.add_term({0, 1}, Scalar(1));
  r.add_term({1, 0}, Scalar(-1));
  return r;
}

namespace {

// c[i][j][k]: coefficient of e_k in e_i e_j.
using Table = std::array<std::array<std::array<Scalar, 2>, 2>, 2>;

Table family(int which) {
  Table t{};
  auto set = [&](int i, int j, int k, long v) { t[i][j][k] = v; };
  switch (which) {
    case 0:  // e_1 e_2 = e_1, e_2 e_2 = e_2
      set(0, 1, 0, 1), set(1, 1, 1, 1);
      break;
    case 1:  // e_2 e_1 = e_1, e_2 e_2 = e_2
      set(1, 0, 0, 1), set(1, 1, 1, 1);
      break;
    case 2:  // unital, e_1^2 = 0
      set(1, 1, 1, 1), set(0, 1, 0, 1), set(1, 0, 0, 1);
      break;
    case 3:  // two orthogonal idempotents
      set(0, 0, 0, 1), set(1, 1, 1, 1);
      break;
    case 4:  // e_1^2 = e_2
      set(0, 0, 1, 1);
      break;
    default:  // unital, e_1^2 = 2 e_2
      set(1, 1, 1, 1), set(0, 1, 0, 1), set(1, 0, 0, 1), set(0, 0, 1, 2);
      break;
  }
  return t;
}

}  // namespace

AlgebraPtr random_algebra_2d(Rng& rng) {
  const Table base = family(uniform_below(rng, 6));
  // New basis f_a = sum_i g[i][a] e_i with g invertible.
  std::array<std::array<Scalar, 2>, 2> g{};
  Scalar det;
  do {
    for (auto& row : g) {
      for (auto& x : row) x = random_scalar(rng);
    }
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  } while (sgn(det) == 0);
  std::array<std::array<Scalar, 2>, 2> inv{};
  inv[0][0] = g[1][1] / det;
  inv[0][1] = -g[0][1] / det;
  inv[1][0] = -g[1][0] / det;
  inv[1][1] = g[0][0] / det;

  std::vector<StructureConstant> constants;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        Scalar v = 0;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) v += g[i][a] * g[j][b] * base[i][j][k] * inv[c][k];
          }
        }
        v.canonicalize();
        if (sgn(v) != 0) constants.push_back({a, b, c, v});
      }
    }
  }
  auto alg = AlgebraDef::create({"f1", "f2"}, constants);
  if (!check_associativity(*alg).ok()) throw std::logic_error("random_algebra_2d: not associative");
  return alg;
}

std::optional<RSeries> random_hierarchy_solution(const AlgebraPtr& alg, int order, Rng& rng,
                                                 std::optional<LegTensor> seed) {
  RSeries r(order, LegTensor(alg, 2));
  if (order == 0) return r;
  if (seed) {
    r[1] = *seed;
  } else {
    AlgebraElt a(alg);
    do {
      a = random_element(alg, rng);
    } while (a.is_zero());
    const auto la = LegTensor::from_element(a);
    r[1] = random_nonzero_scalar(rng) * (leg_embed(la, {1}, 2) * leg_embed(la, {2}, 2));
  }
  std::vector<LegTensor> coeffs{r[1]};
  for (int n = 2; n <= order; ++n) {
    const SolutionSet s = hierarchy_solve(coeffs);
    if (!s.consistent) return std::nullopt;
    LegTensor x = *s.particular;
    for (const auto& k : s.kernel) {
      if (uniform_below(rng, 2) == 0) x += random_scalar(rng) * k;
    }
    coeffs.push_back(x);
    r[n] = x;
  }
  return r;
}

}  // namespace itohopf

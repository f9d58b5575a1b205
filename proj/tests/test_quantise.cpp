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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "itohopf/quantise.hpp"
#include "itohopf/ybe.hpp"

using namespace itohopf;
using namespace testing_support;

namespace {

HSeries<MultiTensorElt> mono(const AlgebraPtr& alg, int order, int k, const MultiTensorElt& x) {
  auto s = HSeries<MultiTensorElt>(order, MultiTensorElt(alg, 2));
  s[k] = x;
  return s;
}

}  // namespace

TEST(Quantisation, InverseOfExample) {
  const auto alg = example_algebra();
  const auto ctx = build_context(example_r(alg, 5));
  EXPECT_TRUE(check_inverse(ctx).ok());
  EXPECT_EQ(ctx.r_prime, quasi_inverse(ctx.r));
  const auto o = to_oracle(*alg);
  EXPECT_EQ(to_oracle(ctx.r_matrix), oracle::double_product(o, to_oracle(ctx.r), 5, true));
  EXPECT_EQ(to_oracle(ctx.r_matrix_inverse), oracle::double_product(o, to_oracle(ctx.r_prime), 5, false));
}

TEST(Quantisation, InverseOfRandomR) {
  Rng rng(50);
  for (int t = 0; t < 8; ++t) {
    const auto alg = random_algebra_2d(rng);
    const auto ctx = build_context(random_r_series(alg, 4, rng), false);
    EXPECT_TRUE(check_inverse(ctx).ok());
  }
}

TEST(Quantisation, QuasitriangularExample) {
  const auto alg = example_algebra();
  const auto rep = quasitriangularity_check(build_context(example_r(alg, 3)), 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.grid.size(), 4u);
}

TEST(Quantisation, QuasitriangularRandomR) {
  Rng rng(14);
  for (int t = 0; t < 4; ++t) {
    const auto alg = (t % 2 == 0) ? example_algebra() : random_algebra_2d(rng);
    const auto rep = quasitriangularity_check(build_context(random_r_series(alg, 3, rng)), 2);
    EXPECT_TRUE(rep.coproduct_first.holds);
    EXPECT_TRUE(rep.coproduct_second.holds);
    EXPECT_TRUE(rep.inverse_coproduct_first.holds);
    EXPECT_TRUE(rep.inverse_coproduct_second.holds);
    for (const auto& e : rep.grid) EXPECT_TRUE(e.report.holds) << e.m << "," << e.n;
  }
}

TEST(Quantisation, GridOfRMatrixAtOneOne) {
  const auto alg = example_algebra();
  const auto ctx = build_context(example_r(alg, 3));
  EXPECT_EQ(r_matrix_grid(ctx.r_matrix, 1, 1), ctx.r_matrix);
}

TEST(DeformedCoproduct, ExampleComponentsOfK) {
  const auto alg = example_algebra();
  const int n = 4;
  const auto ctx = build_context(example_r(alg, n));
  const auto d = deformed_coproduct(ctx, word(alg, {K}));
  EXPECT_TRUE(d.warnings.empty());
  EXPECT_EQ(d.component(1, 0), mono(alg, n, 0, multi(alg, {{K}, {}})));
  EXPECT_EQ(d.component(0, 1), mono(alg, n, 0, multi(alg, {{}, {K}})));
  EXPECT_EQ(d.component(1, 1), mono(alg, n, 1, multi(alg, {{L}, {K}}) - multi(alg, {{K}, {L}})));
  EXPECT_EQ(d.component(2, 1), mono(alg, n, 2, multi(alg, {{L, K}, {L}}) - multi(alg, {{K, L}, {L}})));
  EXPECT_EQ(d.component(3, 1), mono(alg, n, 3, multi(alg, {{L, K, L}, {L}}) - multi(alg, {{L, L, K}, {L}})));
  // (1, n): -h^n L (x) (L K - K L) L^{n-2}.
  EXPECT_EQ(d.component(1, 2), mono(alg, n, 2, multi(alg, {{L}, {K, L}}) - multi(alg, {{L}, {L, K}})));
  EXPECT_EQ(d.component(1, 3), mono(alg, n, 3, multi(alg, {{L}, {K, L, L}}) - multi(alg, {{L}, {L, K, L}})));
  EXPECT_EQ(d.component(2, 2), mono(alg, n, 3, multi(alg, {{L, K}, {L, L}}) - multi(alg, {{L, L}, {K, L}})));
  EXPECT_TRUE(d.component(0, 0).is_zero());
}

TEST(DeformedCoproduct, LIsPrimitive) {
  const auto alg = example_algebra();
  const auto ctx = build_context(example_r(alg, 4));
  const auto d = deformed_coproduct(ctx, word(alg, {L}));
  EXPECT_EQ(d.series(), HSeries<MultiTensorElt>::constant(4, multi(alg, {{L}, {}}) + multi(alg, {{}, {L}})));
}

TEST(DeformedCoproduct, ComponentsMatchMatrixModel) {
  const auto alg = example_algebra();
  Rng rng(61);
  const std::vector<RSeries> rs{example_r(alg, 3), random_r_series(alg, 3, rng), random_r_series(alg, 3, rng)};
  const std::vector<TensorElt> as{word(alg, {K}), word(alg, {L}), symmetrize(word(alg, {L, K})),
                                  word(alg, {K, K}, 2) + word(alg, {L})};
  for (const auto& r : rs) {
    const auto ctx = build_context(r, false);
    for (const auto& a : as) {
      const auto d = deformed_coproduct(ctx, a);
      for (int m = 1; m <= 3; ++m) {
        for (int n = 1; m + n <= 4; ++n) {
          const auto expect = matrix_component(r, a, m, n);
          EXPECT_EQ(d.component(m, n), expect) << m << "," << n;
          EXPECT_EQ(deformed_component_by_grid(ctx, a, m, n), expect) << m << "," << n;
        }
      }
    }
  }
}

TEST(DeformedCoproduct, RankBoundsAndWarnings) {
  const auto alg = example_algebra();
  Rng rng(70);
  const auto ctx = build_context(random_r_series(alg, 3, rng), false);
  const auto a = word(alg, {L, K});
  const auto d = deformed_coproduct(ctx, a, 4);
  EXPECT_FALSE(d.warnings.empty());
  const int bound = deformed_rank_bound(ctx, a);
  EXPECT_LE(bound, 2 + 2 * 3);
  for (const auto& [m, n] : d.joint_ranks()) {
    EXPECT_LE(m + n, bound);
    EXPECT_LE(m, 2 + 3);
    EXPECT_LE(n, 2 + 3);
  }
}

TEST(DeformedCoproduct, Counit) {
  Rng rng(81);
  const auto alg = example_algebra();
  const auto ctx = build_context(random_r_series(alg, 3, rng), false);
  for (int t = 0; t < 5; ++t) {
    const auto a = symmetrize(random_tensor(alg, 2, rng));
    const auto d = deformed_coproduct(ctx, a).series();
    for (int leg_no : {1, 2}) {
      for (int k = 0; k <= 3; ++k) {
        const auto c = apply_coproduct_to_leg(d[k], leg_no, 0);
        EXPECT_EQ(c, k == 0 ? MultiTensorElt::from_tensor(a) : MultiTensorElt(alg, 1));
      }
    }
  }
}

TEST(DeformedCoproduct, Multiplicative) {
  Rng rng(92);
  const auto alg = example_algebra();
  const auto ctx = build_context(random_r_series(alg, 3, rng), false);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_tensor(alg, 2, rng, 2);
    const auto b = random_tensor(alg, 2, rng, 2);
    const auto da = deformed_coproduct(ctx, a).series();
    const auto db = deformed_coproduct(ctx, b).series();
    EXPECT_EQ(deformed_coproduct(ctx, a * b).series(), da * db);
  }
}

TEST(DeformedCoproduct, Coassociative) {
  const auto alg = example_algebra();
  const auto ctx = build_context(example_r(alg, 3));
  for (const auto& a : {word(alg, {K}), word(alg, {L}), symmetrize(word(alg, {K, L}))}) {
    EXPECT_TRUE(coassociativity_check(ctx, a).holds);
  }
}

TEST(Cobracket, ExampleValues) {
  const auto alg = example_algebra();
  const auto ctx = build_context(example_r(alg, 2));
  EXPECT_EQ(cobracket(ctx, AlgebraElt::basis(alg, K)), leg(alg, {L, K}, 2) - leg(alg, {K, L}, 2));
  EXPECT_TRUE(cobracket(ctx, AlgebraElt::basis(alg, L)).is_zero());
}

TEST(Cobracket, SkewAndClosedForm) {
  Rng rng(101);
  for (int t = 0; t < 6; ++t) {
    const auto alg = (t % 2 == 0) ? example_algebra() : random_algebra_2d(rng);
    const auto ctx = build_context(random_r_series(alg, 2, rng), false);
    const auto x = random_element(alg, rng);
    const auto delta = cobracket(ctx, x);
    EXPECT_EQ(flip_21(delta), Scalar(-1) * delta);
    EXPECT_EQ(delta, cobracket_closed_form(ctx.r[1], x));
  }
}

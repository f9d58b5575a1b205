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
#include "itohopf/prodint.hpp"

using namespace itohopf;
using namespace testing_support;

namespace {

using AE = AlgebraElt;

AE basis(const AlgebraPtr& alg, int i) { return AE::basis(alg, i); }

Driving<AE> drive(const AlgebraPtr& alg, int order, const std::vector<std::tuple<int, AE, int>>& terms) {
  Driving<AE> l(order, AWordSum<AE>(AE(alg)));
  for (const auto& [k, a, x] : terms) l[k].add(Word{x}, a);
  return l;
}

oracle::Vec to_vec(const AE& a) {
  oracle::Vec v(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) v[static_cast<std::size_t>(i)] = a[i];
  return v;
}

// The integral tail against the sequence enumeration oracle.
void expect_matches_oracle(const Driving<AE>& l, Direction dir) {
  const auto& alg = l[0].zero().algebra();
  const auto o = to_oracle(*alg);
  std::vector<oracle::Drive<oracle::Vec>> d;
  for (int k = 1; k <= l.order(); ++k) {
    for (const auto& [w, a] : l[k].terms()) d.push_back({k, to_vec(a), w.front()});
  }
  const auto expect = oracle::expand<oracle::Vec>(
      d, l.order(), dir == Direction::forward, [&](const oracle::Vec& x, const oracle::Vec& y) { return oracle::mul(o, x, y); },
      [](const oracle::Vec& x) {
        for (const auto& c : x) {
          if (c != 0) return false;
        }
        return true;
      },
      [](oracle::Vec& x, const oracle::Vec& y) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
      });
  const auto got = decapitated_integral(l, dir, Side::algebra_first);
  oracle::Expansion<oracle::Vec> flat;
  for (int k = 0; k <= l.order(); ++k) {
    for (const auto& [w, a] : got.series[k].terms()) flat[{k, w}] = to_vec(a);
  }
  EXPECT_EQ(flat, expect);
}

HSeries<LegTensor> leg_unit_series(const AlgebraPtr& alg, int order) {
  return HSeries<LegTensor>::constant(order, LegTensor::unit(alg, 1));
}

}  // namespace

TEST(SingleIntegral, SlotOrderOfCoefficients) {
  const auto alg = example_algebra();
  // h (L (x) x) + h (K (x) y) with letters x = L, y = K of T(L).
  const auto l = drive(alg, 2, {{1, basis(alg, L), L}, {1, basis(alg, K), K}});
  const auto fwd = decapitated_integral(l, Direction::forward, Side::algebra_first);
  const auto bwd = decapitated_integral(l, Direction::backward, Side::algebra_first);
  // Word x y: forward gives K L = 0, backward gives L K = L.
  EXPECT_TRUE(fwd.series[2].coeff({L, K}).is_zero());
  EXPECT_EQ(bwd.series[2].coeff({L, K}), basis(alg, L));
  // Word y x: forward gives L K = L, backward K L = 0.
  EXPECT_EQ(fwd.series[2].coeff({K, L}), basis(alg, L));
  EXPECT_TRUE(bwd.series[2].coeff({K, L}).is_zero());
  EXPECT_EQ(fwd.series[2].coeff({K, K}), basis(alg, K));
  EXPECT_EQ(fwd.series[1].coeff({L}), basis(alg, L));
}

TEST(SingleIntegral, MatchesSequenceEnumeration) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const auto alg = (t % 2 == 0) ? example_algebra() : random_algebra_2d(rng);
    Driving<AE> l(4, AWordSum<AE>(AE(alg)));
    for (int k = 1; k <= 4; ++k) {
      const int n = uniform_below(rng, 3);
      for (int i = 0; i < n; ++i) l[k].add(Word{uniform_below(rng, 2)}, random_element(alg, rng));
    }
    expect_matches_oracle(l, Direction::forward);
    expect_matches_oracle(l, Direction::backward);
  }
}

TEST(SingleIntegral, UnitDecapitationAndCounit) {
  const auto alg = example_algebra();
  Driving<LegTensor> l(3, AWordSum<LegTensor>(LegTensor(alg, 1)));
  l[1].add(Word{L}, leg(alg, {K}));
  l[2].add(Word{K}, leg(alg, {L}, 3));
  const auto one = LegTensor::unit(alg, 1);
  const auto y = single_backward(l, one);
  EXPECT_EQ(y.series[0].coeff({}), one);
  EXPECT_EQ(counit_on_tensor_leg(y), leg_unit_series(alg, 3));
  const auto d = decapitate(y);
  EXPECT_TRUE(d.decapitated);
  EXPECT_TRUE(d.series[0].is_zero());
  EXPECT_EQ(d.series, decapitated_integral(l, Direction::backward, Side::algebra_first).series);
  EXPECT_EQ(decapitate(d).series, d.series);
  EXPECT_EQ(single_forward_right(l, one).side, Side::tensor_first);
  EXPECT_EQ(single_backward_right(l, one).direction, Direction::backward);
  // With zero driving only the unit survives.
  const auto z = single_forward(Driving<LegTensor>(3, AWordSum<LegTensor>(LegTensor(alg, 1))), one);
  EXPECT_EQ(counit_on_tensor_leg(z), leg_unit_series(alg, 3));
  EXPECT_EQ(z.series[0].terms().size(), 1u);
}

TEST(SingleIntegral, RejectsInvalidDriving) {
  const auto alg = example_algebra();
  auto l = drive(alg, 2, {{1, basis(alg, L), L}});
  auto c = l;
  c[0].add(Word{L}, basis(alg, K));
  EXPECT_THROW(decapitated_integral(c, Direction::forward, Side::algebra_first), std::invalid_argument);
  auto w = l;
  w[1].add(Word{L, K}, basis(alg, K));
  EXPECT_THROW(decapitated_integral(w, Direction::forward, Side::algebra_first), std::invalid_argument);
  auto e = l;
  e[1].add(Word{}, basis(alg, K));
  EXPECT_THROW(decapitated_integral(e, Direction::forward, Side::algebra_first), std::invalid_argument);
}

TEST(DoubleProduct, ZeroGivesUnit) {
  const auto alg = example_algebra();
  const RSeries r(4, LegTensor(alg, 2));
  for (const auto& d : {double_fb(r), double_bf(r)}) {
    EXPECT_EQ(d.series, HSeries<MultiTensorElt>::constant(4, MultiTensorElt::unit(alg, 2)));
  }
}

TEST(DoubleProduct, LowOrders) {
  const auto alg = example_algebra();
  const auto r = example_r(alg, 3);
  const auto d = double_fb(r);
  EXPECT_EQ(d.orientation, Orientation::forward_backward);
  EXPECT_EQ(d.series[0], MultiTensorElt::unit(alg, 2));
  EXPECT_EQ(d.series[1], leg_to_multi(r[1]));
  // h^2: r1 = L(x)K - K(x)L. Joint rank (1,1) collects the products r1 r1
  // in L (x) L; rank (2,2) the double slots.
  const auto sq = r[1] * r[1];
  EXPECT_EQ(rank_project(d.series[2], {1, 1}), leg_to_multi(sq));
  EXPECT_EQ(double_bf(r).orientation, Orientation::backward_forward);
}

TEST(DoubleProduct, MatchesNestedDefinition) {
  Rng rng(77);
  for (int t = 0; t < 16; ++t) {
    const auto alg = (t < 8) ? example_algebra() : random_algebra_2d(rng);
    const auto r = (t == 0) ? example_r(alg, 4) : random_r_series(alg, 4, rng);
    const auto o = to_oracle(*alg);
    EXPECT_EQ(to_oracle(double_fb(r).series), oracle::double_product(o, to_oracle(r), 4, true)) << "trial " << t;
    EXPECT_EQ(to_oracle(double_bf(r).series), oracle::double_product(o, to_oracle(r), 4, false)) << "trial " << t;
  }
}

TEST(DoubleProduct, ConstructionsAgree) {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto alg = random_algebra_2d(rng);
    const auto r = random_r_series(alg, 4, rng);
    for (auto orient : {Orientation::forward_backward, Orientation::backward_forward}) {
      EXPECT_EQ(double_product(r, orient, Construction::outer_on_first_leg),
                double_product(r, orient, Construction::outer_on_second_leg));
    }
  }
}

TEST(DoubleProduct, CounitsOnEitherLeg) {
  Rng rng(9);
  const auto alg = example_algebra();
  const auto r = random_r_series(alg, 4, rng);
  const auto d = double_fb(r).series;
  for (int leg_no : {1, 2}) {
    for (int k = 0; k <= 4; ++k) {
      const auto c = apply_coproduct_to_leg(d[k], leg_no, 0);
      EXPECT_EQ(c, k == 0 ? MultiTensorElt::unit(alg, 1) : MultiTensorElt(alg, 1));
    }
  }
}

TEST(DoubleProduct, RejectsInvalidR) {
  const auto alg = example_algebra();
  RSeries r(2, LegTensor(alg, 2));
  r[0] = leg(alg, {L, K});
  EXPECT_THROW(double_fb(r), std::invalid_argument);
  RSeries u(2, LegTensor(alg, 2));
  u[1] = leg(alg, {kUnit, K});
  EXPECT_THROW(double_fb(u), std::invalid_argument);
}

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

#include "itohopf/selftest.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "itohopf/quantise.hpp"
#include "itohopf/random.hpp"
#include "itohopf/ybe.hpp"

namespace itohopf {

namespace {

// Runs body for each trial; the first failure is recorded with its trial.
void trial_check(Report& rep, const std::string& name, int trials, const std::function<bool(int)>& body) {
  for (int t = 0; t < trials; ++t) {
    bool ok = false;
    std::string why;
    try {
      ok = body(t);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!ok) {
      std::vector<std::string> detail{"trial " + std::to_string(t)};
      if (!why.empty()) detail.push_back("error " + why);
      rep.add_check(name, false, detail);
      return;
    }
  }
  rep.add_check(name, true);
}

bool supported_as_expansion(const HSeries<MultiTensorElt>& big_r, const RSeries& r) {
  for (int k = 1; k <= big_r.order(); ++k) {
    const auto beta = big_r[k] - leg_to_multi(r[k]);
    for (const auto& jr : beta.joint_ranks()) {
      if (jr[0] < 1 || jr[1] < 1 || std::max(jr[0], jr[1]) < 2) return false;
    }
    for (const auto& jr : big_r[k].joint_ranks()) {
      if (jr[0] > k || jr[1] > k) return false;
    }
  }
  return true;
}

}  // namespace

Report run_selftest(const AlgebraPtr& alg, const RSeries& r, const SelftestOptions& opt) {
  Report rep;
  Rng rng(opt.seed);
  const int n = opt.order;
  const int trials = opt.trials;
  const RSeries rn = extend(truncate(r, std::min(n, r.order())), n);

  rep.add_check("associativity", check_associativity(*alg).ok());

  trial_check(rep, "ito_product_associative", trials, [&](int) {
    const auto a = random_tensor(alg, 2, rng);
    const auto b = random_tensor(alg, 2, rng);
    const auto c = random_tensor(alg, 2, rng);
    const auto u = TensorElt::unit(alg);
    return (a * b) * c == a * (b * c) && u * a == a && a * u == a;
  });

  trial_check(rep, "coproduct_coassociative_counital", trials, [&](int) {
    const auto a = random_tensor(alg, 3, rng);
    const auto d = coproduct(a);
    const auto id = MultiTensorElt::from_tensor(a);
    return apply_coproduct_to_leg(d, 1, 2) == apply_coproduct_to_leg(d, 2, 2) &&
           apply_coproduct_to_leg(d, 1, 0) == id && apply_coproduct_to_leg(d, 2, 0) == id;
  });

  trial_check(rep, "coproduct_multiplicative", trials, [&](int) {
    const auto a = random_tensor(alg, 2, rng);
    const auto b = random_tensor(alg, 2, rng);
    return coproduct(a * b) == coproduct(a) * coproduct(b);
  });

  trial_check(rep, "rank_projection_of_iterated_coproduct", trials, [&](int) {
    const auto a = random_tensor(alg, 3, rng);
    for (int m = 0; m <= 3; ++m) {
      const auto d = iterated_coproduct(a, m);
      const std::vector<int> ones(static_cast<std::size_t>(m), 1);
      const auto comp = a.rank_component(m);
      MultiTensorElt expect(alg, m);
      for (const auto& [w, c] : comp.terms()) {
        MultiWord key;
        for (int letter : w) key.push_back(Word{letter});
        expect.add_term(key, c);
      }
      if (!(rank_project(d, ones) == expect)) return false;
    }
    return true;
  });

  trial_check(rep, "quasi_inverse_identities", trials, [&](int) {
    const auto x = random_r_series(alg, n, rng);
    auto mul = [](const LegTensor& a, const LegTensor& b) { return a * b; };
    const auto q = quasi_inverse(x, mul);
    const auto zero = x.zero_like();
    const auto unit = LegTensor::unit(alg, 2);
    return x + q + series_mul(x, q, mul) == zero && x + q + series_mul(q, x, mul) == zero &&
           quasi_inverse(q, mul) == x && unitalize(q) == series_invert(unitalize(x), unit);
  });

  auto context_ok = [&](const RSeries& x) {
    const auto ctx = build_context(x, false);
    return check_inverse(ctx).ok() && supported_as_expansion(ctx.r_matrix, x);
  };
  rep.add_check("double_product_structure_and_inverse", [&] {
    try {
      return context_ok(rn);
    } catch (const std::exception&) {
      return false;
    }
  }());
  trial_check(rep, "double_product_structure_and_inverse_random", trials,
              [&](int) { return context_ok(random_r_series(alg, n, rng)); });

  trial_check(rep, "toy_and_full_yang_baxter_agree", trials, [&](int t) {
    RSeries x = rn;
    if (t > 0) {
      auto solved = t % 2 == 1 ? random_hierarchy_solution(alg, n, rng) : std::nullopt;
      x = solved ? *solved : random_r_series(alg, n, rng);
    }
    const auto toy = toy_qybe_check(x);
    const auto full = qybe_check(double_fb(x).series);
    return toy.holds == full.holds && toy.order == full.order;
  });

  trial_check(rep, "braces_first_case_matches_toy", trials, [&](int) {
    const auto x = random_r_series(alg, n, rng);
    return braces_check(unitalize(x), 1, 1, 1).holds == toy_qybe_check(x).holds;
  });

  const auto ctx = build_context(rn, false);
  rep.add_check("inverse", check_inverse(ctx).ok());
  rep.add_check("quasitriangularity", quasitriangularity_check(ctx, 2).ok());

  trial_check(rep, "deformed_coproduct_two_routes", alg->dim(), [&](int i) {
    const auto a = TensorElt::word(alg, {i});
    deformed_coproduct(ctx, a, 6);
    return true;
  });

  trial_check(rep, "deformed_coproduct_counit", alg->dim(), [&](int i) {
    const auto a = TensorElt::word(alg, {i});
    const auto d = deformed_coproduct(ctx, a).series();
    for (int k = 0; k <= n; ++k) {
      const auto expect = k == 0 ? MultiTensorElt::from_tensor(a) : MultiTensorElt(alg, 1);
      if (!(apply_coproduct_to_leg(d[k], 1, 0) == expect) || !(apply_coproduct_to_leg(d[k], 2, 0) == expect)) {
        return false;
      }
    }
    return true;
  });

  trial_check(rep, "cobracket_closed_form_and_skew", alg->dim(), [&](int i) {
    if (n < 1) return true;
    const auto delta = cobracket(ctx, AlgebraElt::basis(alg, i));
    return (delta + flip_21(delta)).is_zero();
  });

  return rep;
}

}  // namespace itohopf

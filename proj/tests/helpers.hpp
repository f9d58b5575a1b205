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

#ifndef ITOHOPF_TESTS_HELPERS_HPP
#define ITOHOPF_TESTS_HELPERS_HPP

#include <functional>
#include <string>
#include <vector>

#include "itohopf/algebra.hpp"
#include "itohopf/hseries.hpp"
#include "itohopf/prodint.hpp"
#include "itohopf/random.hpp"
#include "itohopf/tensor.hpp"
#include "oracle/oracle.hpp"

namespace testing_support {

using namespace itohopf;

// Basis indices of the two-dimensional example.
inline constexpr int L = 0;
inline constexpr int K = 1;

inline oracle::Alg to_oracle(const AlgebraDef& def) {
  std::vector<std::tuple<int, int, int, long>> none;
  oracle::Alg a = oracle::make_alg(def.dim(), none);
  for (const auto& c : def.structure_constants()) a.table[c.left][c.right][c.result] += c.value;
  return a;
}

inline oracle::Tensor to_oracle(const TensorElt& x) {
  oracle::Tensor out;
  for (const auto& [w, c] : x.terms()) out[w] = c;
  return out;
}

inline oracle::Multi to_oracle(const MultiTensorElt& x) {
  oracle::Multi out;
  for (const auto& [w, c] : x.terms()) out[w] = c;
  return out;
}

inline std::vector<oracle::REntry> to_oracle(const RSeries& r) {
  std::vector<oracle::REntry> out;
  for (int k = 1; k <= r.order(); ++k) {
    for (const auto& [idx, c] : r[k].terms()) out.push_back({k, idx[0], idx[1], c});
  }
  return out;
}

inline oracle::Series2 to_oracle(const HSeries<MultiTensorElt>& x) {
  oracle::Series2 out;
  for (int k = 0; k <= x.order(); ++k) {
    for (const auto& [w, c] : x[k].terms()) out[{k, w[0], w[1]}] = c;
  }
  return out;
}

/// Matrix image of a tensor over the example algebra.
inline oracle::Mat to_mat(const LegTensor& x) {
  oracle::Mat out = oracle::mat_zero(x.legs());
  for (const auto& [idx, c] : x.terms()) out = oracle::mat_add(out, oracle::mat_monomial(idx, c));
  return out;
}

/// Every monomial of p legs over {unit, L, K}, read back from a matrix.
inline LegTensor from_mat(const AlgebraPtr& alg, const oracle::Mat& m) {
  LegTensor out(alg, m.legs);
  std::vector<int> sym(static_cast<std::size_t>(m.legs), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sym.size()) {
      const auto c = oracle::mat_coeff(m, sym);
      if (c != 0) out.add_term(sym, c);
      return;
    }
    for (int s = -1; s <= 1; ++s) {
      sym[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline LegTensor leg(const AlgebraPtr& alg, LegIndex idx, long c = 1) { return LegTensor::monomial(alg, std::move(idx), Scalar(c)); }

inline TensorElt word(const AlgebraPtr& alg, Word w, long c = 1) { return TensorElt::word(alg, std::move(w), Scalar(c)); }

inline MultiTensorElt multi(const AlgebraPtr& alg, MultiWord w, long c = 1) {
  return MultiTensorElt::monomial(alg, std::move(w), Scalar(c));
}

/// h r_1 for the example, truncated at n.
inline RSeries example_r(const AlgebraPtr& alg, int n) {
  RSeries r(n, LegTensor(alg, 2));
  if (n >= 1) r[1] = example_r1(alg);
  return r;
}

inline oracle::MatSeries mat_invert(const oracle::MatSeries& x) {
  oracle::MatSeries y(x.size(), oracle::mat_zero(x.front().legs));
  y[0] = oracle::mat_identity(x.front().legs);
  for (std::size_t k = 1; k < x.size(); ++k) {
    oracle::Mat acc = oracle::mat_zero(x.front().legs);
    for (std::size_t j = 1; j <= k; ++j) acc = oracle::mat_add(acc, oracle::mat_mul(x[j], y[k - j]));
    y[k] = oracle::mat_scale(acc, -1);
  }
  return y;
}

// Sum of x's letters placed on every increasing choice of legs, unit elsewhere.
inline oracle::Mat mat_placements(const TensorElt& a, int p) {
  oracle::Mat out = oracle::mat_zero(p);
  for (const auto& [w, c] : a.terms()) {
    const int len = static_cast<int>(w.size());
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
      if (__builtin_popcount(mask) != len) continue;
      std::vector<int> sym(static_cast<std::size_t>(p), -1);
      std::size_t next = 0;
      for (int i = 0; i < p; ++i) {
        if (mask & (1u << i)) sym[static_cast<std::size_t>(i)] = w[next++];
      }
      out = oracle::mat_add(out, oracle::mat_monomial(sym, c));
    }
  }
  return out;
}

// Joint rank (m, n) of R D(a) R^{-1} in the matrix model of the example.
inline HSeries<MultiTensorElt> matrix_component(const RSeries& r, const TensorElt& a, int m, int n) {
  const auto& alg = a.algebra();
  const int p = m + n;
  const int order = r.order();
  const auto entries = to_oracle(r);
  oracle::MatSeries acc(static_cast<std::size_t>(order) + 1, oracle::mat_zero(p));
  acc[0] = oracle::mat_identity(p);
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= n; ++k) acc = oracle::mat_series_mul(acc, oracle::mat_rho(entries, order, j, p + 1 - k, p));
  }
  oracle::MatSeries mid(static_cast<std::size_t>(order) + 1, oracle::mat_zero(p));
  mid[0] = mat_placements(a, p);
  acc = oracle::mat_series_mul(acc, mid);
  // (1 + r)^{-1} on legs (m + 1 - j, m + k), j outer, k inner.
  for (int j = 1; j <= m; ++j) {
    for (int k = 1; k <= n; ++k) {
      acc = oracle::mat_series_mul(acc, mat_invert(oracle::mat_rho(entries, order, m + 1 - j, m + k, p)));
    }
  }
  HSeries<MultiTensorElt> out(order, MultiTensorElt(alg, 2));
  for (int k = 0; k <= order; ++k) {
    const auto t = from_mat(alg, acc[static_cast<std::size_t>(k)]);
    for (const auto& [key, c] : t.terms()) {
      bool full = true;
      for (int s : key) full = full && s != kUnit;
      if (!full) continue;
      out[k].add_term({Word(key.begin(), key.begin() + m), Word(key.begin() + m, key.end())}, c);
    }
  }
  return out;
}

}  // namespace testing_support

#endif  // ITOHOPF_TESTS_HELPERS_HPP

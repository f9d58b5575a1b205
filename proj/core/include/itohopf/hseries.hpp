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

#ifndef ITOHOPF_HSERIES_HPP
#define ITOHOPF_HSERIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itohopf/scalar.hpp"

namespace itohopf {

// Formal power series in h truncated at order N (inclusive), coefficients in
// an additive space X. X must provide copy, +=, -=, *= Scalar, is_zero(),
// zero_like() and ==; series_mul additionally needs a product on X.
//
// Arithmetic between series requires equal truncation orders. Use
// truncate() / extend() to change the order explicitly.
template <class X>
class HSeries {
 public:
  HSeries(int order, const X& zero) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, zero.zero_like());
  }

  /// c0 + 0 h + ... + 0 h^N
  static HSeries constant(int order, const X& c0) {
    HSeries s(order, c0);
    s.coeffs_[0] = c0;
    return s;
  }

  /// c h^k truncated at `order`.
  static HSeries monomial(int order, int k, const X& c) {
    HSeries s(order, c);
    if (k < 0) throw std::invalid_argument("negative power of h");
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const X& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  X& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<X>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  HSeries zero_like() const { return HSeries(order(), coeffs_.front()); }

  std::optional<int> lowest_nonzero_order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    }
    return std::nullopt;
  }

  HSeries& operator+=(const HSeries& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }

  HSeries& operator-=(const HSeries& o) {
    require_same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }

  HSeries& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend bool operator==(const HSeries& a, const HSeries& b) { return a.coeffs_ == b.coeffs_; }

  void require_same_order(const HSeries& o) const {
    if (o.order() != order()) {
      throw std::invalid_argument("truncation order mismatch: " + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()));
    }
  }

 private:
  std::vector<X> coeffs_;
};

template <class X>
HSeries<X> operator+(HSeries<X> a, const HSeries<X>& b) {
  return a += b;
}

template <class X>
HSeries<X> operator-(HSeries<X> a, const HSeries<X>& b) {
  return a -= b;
}

template <class X>
HSeries<X> operator*(const Scalar& s, HSeries<X> a) {
  return a *= s;
}

template <class X>
HSeries<X> series_add(const HSeries<X>& a, const HSeries<X>& b) {
  return a + b;
}

template <class X>
HSeries<X> series_scale(const HSeries<X>& a, const Scalar& s) {
  return s * a;
}

/// Drops coefficients above `order` (order must not exceed the current one).
template <class X>
HSeries<X> truncate(const HSeries<X>& x, int order) {
  if (order > x.order()) throw std::invalid_argument("truncate cannot raise the order");
  HSeries<X> out(order, x[0]);
  for (int k = 0; k <= order; ++k) out[k] = x[k];
  return out;
}

/// Pads with zero coefficients up to `order`.
template <class X>
HSeries<X> extend(const HSeries<X>& x, int order) {
  if (order < x.order()) throw std::invalid_argument("extend cannot lower the order");
  HSeries<X> out(order, x[0]);
  for (int k = 0; k <= x.order(); ++k) out[k] = x[k];
  return out;
}

/// Cauchy product truncated at the common order.
template <class X, class Mul>
HSeries<X> series_mul(const HSeries<X>& x, const HSeries<X>& y, Mul&& mul) {
  x.require_same_order(y);
  const int n = x.order();
  HSeries<X> out = x.zero_like();
  for (int i = 0; i <= n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += mul(x[i], y[j]);
    }
  }
  return out;
}

template <class X>
HSeries<X> series_mul(const HSeries<X>& x, const HSeries<X>& y) {
  return series_mul(x, y, [](const X& a, const X& b) { return a * b; });
}

template <class X>
HSeries<X> operator*(const HSeries<X>& x, const HSeries<X>& y) {
  return series_mul(x, y);
}

/// Multiplicative inverse of a series with constant term `unit`, computed
/// order by order: y_0 = 1, y_k = -sum_{j=1..k} x_j y_{k-j}.
template <class X, class Mul>
HSeries<X> series_invert(const HSeries<X>& x, const X& unit, Mul&& mul) {
  if (!(x[0] == unit)) throw std::invalid_argument("series_invert: constant term is not the unit");
  HSeries<X> y = x.zero_like();
  y[0] = unit;
  for (int k = 1; k <= x.order(); ++k) {
    X acc = unit.zero_like();
    for (int j = 1; j <= k; ++j) {
      if (x[j].is_zero() || y[k - j].is_zero()) continue;
      acc += mul(x[j], y[k - j]);
    }
    acc *= Scalar(-1);
    y[k] = std::move(acc);
  }
  return y;
}

template <class X>
HSeries<X> series_invert(const HSeries<X>& x, const X& unit) {
  return series_invert(x, unit, [](const X& a, const X& b) { return a * b; });
}

/// The unique r' with r + r' + r r' = 0 (and r + r' + r' r = 0) for r with
/// vanishing constant term; works in a nonunital coefficient algebra.
/// r'_k = -r_k - sum_{j=1..k-1} r_j r'_{k-j}.
template <class X, class Mul>
HSeries<X> quasi_inverse(const HSeries<X>& r, Mul&& mul) {
  if (!r[0].is_zero()) throw std::invalid_argument("quasi_inverse: nonzero constant term");
  HSeries<X> q = r.zero_like();
  for (int k = 1; k <= r.order(); ++k) {
    X acc = r[k];
    for (int j = 1; j < k; ++j) {
      if (r[j].is_zero() || q[k - j].is_zero()) continue;
      acc += mul(r[j], q[k - j]);
    }
    acc *= Scalar(-1);
    q[k] = std::move(acc);
  }
  return q;
}

template <class X>
HSeries<X> quasi_inverse(const HSeries<X>& r) {
  return quasi_inverse(r, [](const X& a, const X& b) { return a * b; });
}

}  // namespace itohopf

#endif  // ITOHOPF_HSERIES_HPP

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

#ifndef ITOHOPF_PRODINT_HPP
#define ITOHOPF_PRODINT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "itohopf/algebra.hpp"
#include "itohopf/hseries.hpp"
#include "itohopf/tensor.hpp"

namespace itohopf {

/// Which way the A-coefficients of successive slots are multiplied.
///
/// For term n with slots carrying a_1 (x) x_1, ..., a_n (x) x_n the word leg
/// is x_1 x_2 ... x_n and the A leg is
///   forward:  a_n ... a_2 a_1
///   backward: a_1 a_2 ... a_n
enum class Direction { forward, backward };

/// Whether the A leg is written first (A (x) T(L)) or last (T(L) (x) A). The
/// expansion itself is the same; the tag records the leg order.
enum class Side { algebra_first, tensor_first };

/// Element of A (x) T(L): a finitely supported map from words to A.
template <class A>
class AWordSum {
 public:
  explicit AWordSum(const A& zero) : zero_(zero.zero_like()) {}

  const std::map<Word, A>& terms() const { return terms_; }
  const A& zero() const { return zero_; }

  A coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add(const Word& w, const A& a) {
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  AWordSum zero_like() const { return AWordSum(zero_); }

  AWordSum& operator+=(const AWordSum& o) {
    for (const auto& [w, a] : o.terms_) add(w, a);
    return *this;
  }
  AWordSum& operator-=(const AWordSum& o) {
    for (const auto& [w, a] : o.terms_) {
      A neg = a;
      neg *= Scalar(-1);
      add(w, neg);
    }
    return *this;
  }
  AWordSum& operator*=(const Scalar& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  friend bool operator==(const AWordSum& a, const AWordSum& b) { return a.terms_ == b.terms_; }

 private:
  A zero_;
  std::map<Word, A> terms_;
};

/// A driving element in h(A (x) L)[[h]]: rank-1 words only, zero constant term.
template <class A>
using Driving = HSeries<AWordSum<A>>;

template <class A>
struct SingleIntegral {
  Direction direction;
  Side side;
  bool decapitated;
  HSeries<AWordSum<A>> series;
};

namespace detail {

template <class A>
void check_driving(const Driving<A>& l) {
  if (!l[0].is_zero()) throw std::invalid_argument("driving element has a nonzero constant term");
  for (int k = 0; k <= l.order(); ++k) {
    for (const auto& [w, a] : l[k].terms()) {
      if (w.size() != 1) throw std::invalid_argument("driving element must be rank 1 in its L leg");
    }
  }
}

// Sum over n >= 1 of the n-slot terms, h-order by h-order. Each slot carries
// at least one power of h, so at most N slots contribute.
template <class A>
HSeries<AWordSum<A>> expand_tail(const Driving<A>& l, Direction dir) {
  check_driving(l);
  const int n_max = l.order();
  const A& zero = l[0].zero();
  HSeries<AWordSum<A>> out(n_max, AWordSum<A>(zero));
  // frontier[k]: terms with the current number of slots at h-order k.
  std::vector<std::map<Word, A>> frontier(static_cast<std::size_t>(n_max) + 1);
  for (int k = 1; k <= n_max; ++k) {
    for (const auto& [w, a] : l[k].terms()) frontier[static_cast<std::size_t>(k)].emplace(w, a);
  }
  while (true) {
    bool any = false;
    for (int k = 0; k <= n_max; ++k) {
      for (const auto& [w, a] : frontier[static_cast<std::size_t>(k)]) {
        out[k].add(w, a);
        any = true;
      }
    }
    if (!any) break;
    std::vector<std::map<Word, A>> next(static_cast<std::size_t>(n_max) + 1);
    for (int k = 1; k <= n_max; ++k) {
      for (const auto& [w, p] : frontier[static_cast<std::size_t>(k)]) {
        for (int kk = 1; k + kk <= n_max; ++kk) {
          for (const auto& [x, a] : l[kk].terms()) {
            A q = (dir == Direction::forward) ? a * p : p * a;
            if (q.is_zero()) continue;
            Word w2 = w;
            w2.push_back(x.front());
            auto& slot = next[static_cast<std::size_t>(k + kk)];
            auto [it, inserted] = slot.try_emplace(std::move(w2), q);
            if (!inserted) {
              it->second += q;
              if (it->second.is_zero()) slot.erase(it);
            }
          }
        }
      }
    }
    frontier.swap(next);
  }
  return out;
}

}  // namespace detail

/// Product integral over a unital A: 1 + sum_{n>=1} (n-slot terms).
template <class A>
SingleIntegral<A> single_integral(const Driving<A>& l, const A& unit, Direction dir, Side side) {
  auto series = detail::expand_tail(l, dir);
  series[0].add(Word{}, unit);
  return {dir, side, false, std::move(series)};
}

/// The same expansion without the leading unit; A need not be unital.
template <class A>
SingleIntegral<A> decapitated_integral(const Driving<A>& l, Direction dir, Side side) {
  return {dir, side, true, detail::expand_tail(l, dir)};
}

template <class A>
SingleIntegral<A> single_forward(const Driving<A>& l, const A& unit) {
  return single_integral(l, unit, Direction::forward, Side::algebra_first);
}

template <class A>
SingleIntegral<A> single_backward(const Driving<A>& l, const A& unit) {
  return single_integral(l, unit, Direction::backward, Side::algebra_first);
}

template <class A>
SingleIntegral<A> single_forward_right(const Driving<A>& m, const A& unit) {
  return single_integral(m, unit, Direction::forward, Side::tensor_first);
}

template <class A>
SingleIntegral<A> single_backward_right(const Driving<A>& m, const A& unit) {
  return single_integral(m, unit, Direction::backward, Side::tensor_first);
}

/// Removes the unit term (the empty-word coefficient at order 0).
template <class A>
SingleIntegral<A> decapitate(SingleIntegral<A> y) {
  if (y.decapitated) return y;
  const A c = y.series[0].coeff(Word{});
  A neg = c;
  neg *= Scalar(-1);
  y.series[0].add(Word{}, neg);
  y.decapitated = true;
  return y;
}

/// Applies the counit to the T(L) leg.
template <class A>
HSeries<A> counit_on_tensor_leg(const SingleIntegral<A>& y) {
  const A& zero = y.series[0].zero();
  HSeries<A> out(y.series.order(), zero);
  for (int k = 0; k <= y.series.order(); ++k) out[k] = y.series[k].coeff(Word{});
  return out;
}

/// An A = T(L) single integral as a 2-leg tensor, legs ordered per its side.
MultiTensorElt to_multi(const AWordSum<TensorElt>& x, Side side);

// ---------------------------------------------------------------------------
// Double product integrals.

/// h(L (x) L)[[h]] is carried as a series of 2-leg tensors without unit legs.
using RSeries = HSeries<LegTensor>;

/// ->  <-  (forward_backward) and  <-  ->  (backward_forward).
enum class Orientation { forward_backward, backward_forward };

/// The two iterated constructions of a double product:
///  outer_on_first_leg: inner decapitated integral over the second leg's L,
///    outer integral with A = T(L) on the first leg.
///  outer_on_second_leg: inner over the first leg's L, outer with A = T(L) on
///    the second leg.
enum class Construction { outer_on_first_leg, outer_on_second_leg };

struct DoubleProduct {
  Orientation orientation;
  HSeries<MultiTensorElt> series;
};

/// Throws unless r has zero constant term and every coefficient lies in L (x) L.
void check_r_series(const RSeries& r);

HSeries<MultiTensorElt> double_product(const RSeries& r, Orientation orientation, Construction construction);

/// ->  <- (1 + dr). With cross_check, both constructions are computed and
/// compared; a mismatch throws std::logic_error.
DoubleProduct double_fb(const RSeries& r, bool cross_check = true);

/// <-  -> (1 + dr).
DoubleProduct double_bf(const RSeries& r, bool cross_check = true);

}  // namespace itohopf

#endif  // ITOHOPF_PRODINT_HPP

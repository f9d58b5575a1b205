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

#ifndef ITOHOPF_TESTS_ORACLE_HPP
#define ITOHOPF_TESTS_ORACLE_HPP

// Test-only reference implementations. They share nothing with the library
// beyond the rational scalar type: plain maps, dense tables and brute-force
// enumeration.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Word = std::vector<int>;
using Tensor = std::map<Word, Q>;             // element of T(L)
using Multi = std::map<std::vector<Word>, Q>; // element of a tensor power of T(L)

/// Dense multiplication table: table[i][j][k] = coefficient of e_k in e_i e_j.
struct Alg {
  int dim = 0;
  std::vector<std::vector<std::vector<Q>>> table;
};

Alg make_alg(int dim, const std::vector<std::tuple<int, int, int, long>>& constants);

void add_to(Tensor& t, const Word& w, const Q& c);
void add_to(Multi& t, const std::vector<Word>& w, const Q& c);

/// Sticky shuffle by explicit enumeration of covering pairs of increasing
/// maps {0..m-1} -> {0..p-1}, {0..n-1} -> {0..p-1}.
Tensor shuffle(const Alg& a, const Word& u, const Word& v);
Tensor product(const Alg& a, const Tensor& x, const Tensor& y);
Multi multi_product(const Alg& a, const Multi& x, const Multi& y);

/// m-fold coproduct by enumerating cut points 0 <= j_1 <= ... <= j_{m-1} <= len.
Multi iterated_coproduct(const Tensor& x, int m);

/// Elements of L as dense coefficient vectors.
using Vec = std::vector<Q>;
Vec mul(const Alg& a, const Vec& x, const Vec& y);

/// One driving term: h^order a (x) letter.
template <class A>
struct Drive {
  int order;
  A a;
  int letter;
};

/// (h-order, word) -> A coefficient.
template <class A>
using Expansion = std::map<std::pair<int, Word>, A>;

/// Brute-force product integral without the unit term: every sequence of
/// driving terms whose orders sum to at most n_max. With descending, the
/// A-factors are multiplied last slot first (a_n ... a_1), otherwise first
/// slot first.
template <class A>
Expansion<A> expand(const std::vector<Drive<A>>& l, int n_max, bool descending,
                    const std::function<A(const A&, const A&)>& mul_a,
                    const std::function<bool(const A&)>& is_zero,
                    const std::function<void(A&, const A&)>& add) {
  Expansion<A> out;
  std::vector<int> seq;
  std::function<void(int)> rec = [&](int used) {
    if (!seq.empty()) {
      A acc = l[static_cast<std::size_t>(seq.front())].a;
      Word w{l[static_cast<std::size_t>(seq.front())].letter};
      for (std::size_t s = 1; s < seq.size(); ++s) {
        const auto& d = l[static_cast<std::size_t>(seq[s])];
        acc = descending ? mul_a(d.a, acc) : mul_a(acc, d.a);
        w.push_back(d.letter);
      }
      if (!is_zero(acc)) {
        auto key = std::make_pair(used, w);
        auto it = out.find(key);
        if (it == out.end()) out.emplace(key, acc);
        else add(it->second, acc);
      }
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (used + l[i].order > n_max) continue;
      seq.push_back(static_cast<int>(i));
      rec(used + l[i].order);
      seq.pop_back();
    }
  };
  rec(0);
  for (auto it = out.begin(); it != out.end();) {
    if (is_zero(it->second)) it = out.erase(it);
    else ++it;
  }
  return out;
}

/// (h-order, leg-1 word, leg-2 word) -> coefficient.
using Series2 = std::map<std::tuple<int, Word, Word>, Q>;

/// r as (h-order, left index, right index, value).
struct REntry {
  int order;
  int left;
  int right;
  Q value;
};

/// Double product by the nested definition: the inner decapitated integral
/// runs over the second leg's L with words on the first leg; the outer one
/// has A = T(L) on the first leg. forward_backward selects the orientation
/// (outer descending, inner ascending) or its reverse.
Series2 double_product(const Alg& a, const std::vector<REntry>& r, int n_max, bool forward_backward);

// --- Matrix model of the two-dimensional example: 1 -> I, L -> E12, K -> E22.

/// Square matrix of size 2^legs, row-major.
struct Mat {
  int legs = 0;
  std::vector<Q> v;
  std::size_t size() const { return std::size_t{1} << legs; }
  Q& at(std::size_t i, std::size_t j) { return v[i * size() + j]; }
  const Q& at(std::size_t i, std::size_t j) const { return v[i * size() + j]; }
};

Mat mat_zero(int legs);
Mat mat_identity(int legs);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_scale(const Mat& x, const Q& s);

/// Per-leg symbol: -1 unit, 0 L, 1 K.
Mat mat_monomial(const std::vector<int>& symbols, const Q& c);
/// Coefficient of a monomial in a matrix lying in the image.
Q mat_coeff(const Mat& x, const std::vector<int>& symbols);

/// Truncated series of matrices.
using MatSeries = std::vector<Mat>;
MatSeries mat_series_mul(const MatSeries& x, const MatSeries& y);

/// r placed on legs (a, b) (1-based) of p legs, as 1 + sum_k h^k r_k.
MatSeries mat_rho(const std::vector<REntry>& r, int n_max, int a, int b, int p);

}  // namespace oracle

#endif  // ITOHOPF_TESTS_ORACLE_HPP

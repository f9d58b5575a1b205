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

#include "itohopf/tensor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace itohopf {

namespace {

void check_word(const AlgebraDef& def, const Word& w) {
  for (int b : w) {
    if (b < 0 || b >= def.dim()) throw std::out_of_range("letter out of range");
  }
}

struct CacheKeyHash {
  std::size_t operator()(const std::vector<int>& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : k) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

void sticky_rec(const AlgebraDef& def, const Word& u, const Word& v, std::size_t i, std::size_t j,
                Word& prefix, const Scalar& c, Combination<Word>& out) {
  if (i == u.size() && j == v.size()) {
    out.add(prefix, c);
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    sticky_rec(def, u, v, i + 1, j, prefix, c, out);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    sticky_rec(def, u, v, i, j + 1, prefix, c, out);
    prefix.pop_back();
  }
  if (i < u.size() && j < v.size()) {
    for (const auto& t : def.product(u[i], v[j])) {
      prefix.push_back(t.index);
      sticky_rec(def, u, v, i + 1, j + 1, prefix, c * t.coeff, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// TensorElt

TensorElt::TensorElt(AlgebraPtr alg) : alg_(std::move(alg)) {
  if (!alg_) throw std::invalid_argument("null algebra");
}

TensorElt TensorElt::unit(AlgebraPtr alg) { return word(std::move(alg), {}); }

TensorElt TensorElt::word(AlgebraPtr alg, Word w, const Scalar& c) {
  TensorElt t(std::move(alg));
  t.add_term(w, c);
  return t;
}

TensorElt TensorElt::from_element(const AlgebraElt& x) {
  TensorElt t(x.algebra());
  for (int i = 0; i < x.dim(); ++i) t.add_term({i}, x[i]);
  return t;
}

void TensorElt::add_term(const Word& w, const Scalar& c) {
  check_word(*alg_, w);
  terms_.add(w, c);
}

TensorElt TensorElt::rank_component(int n) const {
  TensorElt out(alg_);
  out.terms_ = terms_.filtered([n](const Word& w) { return static_cast<int>(w.size()) == n; });
  return out;
}

int TensorElt::max_rank() const {
  int r = -1;
  for (const auto& [w, c] : terms_) r = std::max(r, static_cast<int>(w.size()));
  return r;
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  require_same_algebra(alg_, o.alg_);
  terms_ += o.terms_;
  return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
  require_same_algebra(alg_, o.alg_);
  terms_ -= o.terms_;
  return *this;
}

TensorElt& TensorElt::operator*=(const Scalar& s) {
  terms_ *= s;
  return *this;
}

bool operator==(const TensorElt& a, const TensorElt& b) {
  return (a.alg_ == b.alg_ || *a.alg_ == *b.alg_) && a.terms_ == b.terms_;
}

const Combination<Word>& sticky_shuffle(const AlgebraDef& def, const Word& u, const Word& v) {
  thread_local std::unordered_map<std::vector<int>, Combination<Word>, CacheKeyHash> cache;
  std::vector<int> key;
  key.reserve(u.size() + v.size() + 4);
  key.push_back(static_cast<int>(def.id() & 0x7fffffff));
  key.push_back(static_cast<int>(def.id() >> 31));
  key.push_back(static_cast<int>(u.size()));
  key.insert(key.end(), u.begin(), u.end());
  key.push_back(static_cast<int>(v.size()));
  key.insert(key.end(), v.begin(), v.end());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Combination<Word> out;
  Word prefix;
  prefix.reserve(u.size() + v.size());
  sticky_rec(def, u, v, 0, 0, prefix, Scalar(1), out);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

TensorElt ito_product(const TensorElt& a, const TensorElt& b) {
  require_same_algebra(a.algebra(), b.algebra());
  const AlgebraDef& def = *a.algebra();
  TensorElt out(a.algebra());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      const Scalar c = cu * cv;
      for (const auto& [w, cw] : sticky_shuffle(def, u, v)) out.add_term(w, c * cw);
    }
  }
  return out;
}

Scalar counit(const TensorElt& a) { return a.coeff(Word{}); }

TensorElt symmetrize(const TensorElt& a) {
  TensorElt out(a.algebra());
  for (const auto& [w, c] : a.terms()) {
    std::vector<std::size_t> perm(w.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    long count = 0;
    TensorElt orbit(a.algebra());
    do {
      Word pw(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) pw[i] = w[perm[i]];
      orbit.add_term(pw, c);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    orbit *= Scalar(1) / Scalar(count);
    out += orbit;
  }
  return out;
}

bool is_symmetric(const TensorElt& a) { return symmetrize(a) == a; }

// ---------------------------------------------------------------------------
// MultiTensorElt

MultiTensorElt::MultiTensorElt(AlgebraPtr alg, int legs) : alg_(std::move(alg)), legs_(legs) {
  if (!alg_) throw std::invalid_argument("null algebra");
  if (legs_ < 0) throw std::invalid_argument("negative leg count");
}

MultiTensorElt MultiTensorElt::unit(AlgebraPtr alg, int legs) {
  MultiTensorElt t(std::move(alg), legs);
  t.add_term(MultiWord(static_cast<std::size_t>(legs)), Scalar(1));
  return t;
}

MultiTensorElt MultiTensorElt::monomial(AlgebraPtr alg, MultiWord key, const Scalar& c) {
  MultiTensorElt t(std::move(alg), static_cast<int>(key.size()));
  t.add_term(std::move(key), c);
  return t;
}

MultiTensorElt MultiTensorElt::from_tensor(const TensorElt& a) {
  MultiTensorElt t(a.algebra(), 1);
  for (const auto& [w, c] : a.terms()) t.add_term(MultiWord{w}, c);
  return t;
}

MultiTensorElt MultiTensorElt::from_terms(AlgebraPtr alg, int legs, Combination<MultiWord> terms) {
  MultiTensorElt t(std::move(alg), legs);
  t.terms_ = std::move(terms);
  return t;
}

void MultiTensorElt::add_term(const MultiWord& key, const Scalar& c) {
  if (static_cast<int>(key.size()) != legs_) throw std::invalid_argument("multiword has wrong leg count");
  for (const auto& w : key) check_word(*alg_, w);
  terms_.add(key, c);
}

void MultiTensorElt::add_term(MultiWord&& key, const Scalar& c) {
  if (static_cast<int>(key.size()) != legs_) throw std::invalid_argument("multiword has wrong leg count");
  for (const auto& w : key) check_word(*alg_, w);
  terms_.add(std::move(key), c);
}

std::set<std::vector<int>> MultiTensorElt::joint_ranks() const {
  std::set<std::vector<int>> out;
  for (const auto& [k, c] : terms_) out.insert(joint_rank(k));
  return out;
}

void MultiTensorElt::check_compatible(const MultiTensorElt& o) const {
  require_same_algebra(alg_, o.alg_);
  if (legs_ != o.legs_) throw std::invalid_argument("leg count mismatch");
}

MultiTensorElt& MultiTensorElt::operator+=(const MultiTensorElt& o) {
  check_compatible(o);
  terms_ += o.terms_;
  return *this;
}

MultiTensorElt& MultiTensorElt::operator-=(const MultiTensorElt& o) {
  check_compatible(o);
  terms_ -= o.terms_;
  return *this;
}

MultiTensorElt& MultiTensorElt::operator*=(const Scalar& s) {
  terms_ *= s;
  return *this;
}

bool operator==(const MultiTensorElt& a, const MultiTensorElt& b) {
  return a.legs_ == b.legs_ && (a.alg_ == b.alg_ || *a.alg_ == *b.alg_) && a.terms_ == b.terms_;
}

std::vector<int> joint_rank(const MultiWord& key) {
  std::vector<int> r;
  r.reserve(key.size());
  for (const auto& w : key) r.push_back(static_cast<int>(w.size()));
  return r;
}

MultiTensorElt multi_ito_product(const MultiTensorElt& x, const MultiTensorElt& y) {
  require_same_algebra(x.algebra(), y.algebra());
  if (x.legs() != y.legs()) throw std::invalid_argument("leg count mismatch");
  const AlgebraDef& def = *x.algebra();
  const std::size_t p = static_cast<std::size_t>(x.legs());
  Combination<MultiWord> acc;

  std::vector<const Combination<Word>*> shuffles(p);
  MultiWord key(p);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      // Legs where one side is the empty word pass the other word through.
      for (std::size_t leg = 0; leg < p; ++leg) {
        if (a[leg].empty() || b[leg].empty()) {
          shuffles[leg] = nullptr;
          key[leg] = a[leg].empty() ? b[leg] : a[leg];
        } else {
          shuffles[leg] = &sticky_shuffle(def, a[leg], b[leg]);
        }
      }
      const Scalar c = ca * cb;
      std::function<void(std::size_t, const Scalar&)> expand = [&](std::size_t leg, const Scalar& coef) {
        while (leg < p && shuffles[leg] == nullptr) ++leg;
        if (leg == p) {
          acc.add(key, coef);
          return;
        }
        for (const auto& [w, cw] : *shuffles[leg]) {
          key[leg] = w;
          expand(leg + 1, coef * cw);
        }
      };
      expand(0, c);
    }
  }
  return MultiTensorElt::from_terms(x.algebra(), x.legs(), std::move(acc));
}

MultiTensorElt tensor_product(const MultiTensorElt& x, const MultiTensorElt& y) {
  require_same_algebra(x.algebra(), y.algebra());
  MultiTensorElt out(x.algebra(), x.legs() + y.legs());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      MultiWord k = a;
      k.insert(k.end(), b.begin(), b.end());
      out.add_term(std::move(k), ca * cb);
    }
  }
  return out;
}

namespace {

// All splittings of w into m consecutive (possibly empty) pieces.
void for_each_split(const Word& w, int m, const std::function<void(const MultiWord&)>& fn) {
  MultiWord pieces(static_cast<std::size_t>(m));
  std::function<void(int, std::size_t)> rec = [&](int piece, std::size_t start) {
    if (piece == m - 1) {
      pieces[static_cast<std::size_t>(piece)].assign(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
      fn(pieces);
      return;
    }
    for (std::size_t end = start; end <= w.size(); ++end) {
      pieces[static_cast<std::size_t>(piece)].assign(w.begin() + static_cast<std::ptrdiff_t>(start),
                                                     w.begin() + static_cast<std::ptrdiff_t>(end));
      rec(piece + 1, end);
    }
  };
  rec(0, 0);
}

}  // namespace

MultiTensorElt coproduct(const TensorElt& a) { return iterated_coproduct(a, 2); }

MultiTensorElt iterated_coproduct(const TensorElt& a, int m) {
  if (m < 0) throw std::invalid_argument("negative coproduct order");
  MultiTensorElt out(a.algebra(), m);
  if (m == 0) {
    out.add_term(MultiWord{}, counit(a));
    return out;
  }
  for (const auto& [w, c] : a.terms()) {
    for_each_split(w, m, [&](const MultiWord& pieces) { out.add_term(pieces, c); });
  }
  return out;
}

MultiTensorElt rank_project(const MultiTensorElt& x, std::span<const int> ranks) {
  if (static_cast<int>(ranks.size()) != x.legs()) throw std::invalid_argument("rank tuple has wrong length");
  MultiTensorElt out(x.algebra(), x.legs());
  for (const auto& [k, c] : x.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < k.size() && match; ++i) match = static_cast<int>(k[i].size()) == ranks[i];
    if (match) out.add_term(k, c);
  }
  return out;
}

MultiTensorElt rank_project(const MultiTensorElt& x, std::initializer_list<int> ranks) {
  return rank_project(x, std::span<const int>(ranks.begin(), ranks.size()));
}

MultiTensorElt embed_multi(const MultiTensorElt& x, std::span<const int> positions, int p) {
  if (static_cast<int>(positions.size()) != x.legs()) {
    throw std::invalid_argument("position count does not match leg count");
  }
  std::vector<bool> used(static_cast<std::size_t>(p + 1), false);
  for (int pos : positions) {
    if (pos < 1 || pos > p) throw std::out_of_range("leg position out of range");
    if (used[static_cast<std::size_t>(pos)]) throw std::invalid_argument("repeated leg position");
    used[static_cast<std::size_t>(pos)] = true;
  }
  MultiTensorElt out(x.algebra(), p);
  for (const auto& [k, c] : x.terms()) {
    MultiWord nk(static_cast<std::size_t>(p));
    for (std::size_t q = 0; q < positions.size(); ++q) nk[static_cast<std::size_t>(positions[q] - 1)] = k[q];
    out.add_term(std::move(nk), c);
  }
  return out;
}

MultiTensorElt embed_multi(const MultiTensorElt& x, std::initializer_list<int> positions, int p) {
  return embed_multi(x, std::span<const int>(positions.begin(), positions.size()), p);
}

MultiTensorElt apply_coproduct_to_leg(const MultiTensorElt& x, int leg, int m) {
  if (leg < 1 || leg > x.legs()) throw std::out_of_range("leg out of range");
  if (m < 0) throw std::invalid_argument("negative coproduct order");
  const std::size_t l = static_cast<std::size_t>(leg - 1);
  MultiTensorElt out(x.algebra(), x.legs() + m - 1);
  for (const auto& [k, c] : x.terms()) {
    if (m == 0) {
      if (!k[l].empty()) continue;
      MultiWord nk = k;
      nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(l));
      out.add_term(std::move(nk), c);
      continue;
    }
    for_each_split(k[l], m, [&](const MultiWord& pieces) {
      MultiWord nk;
      nk.reserve(k.size() + pieces.size() - 1);
      nk.insert(nk.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(l));
      nk.insert(nk.end(), pieces.begin(), pieces.end());
      nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(l) + 1, k.end());
      out.add_term(std::move(nk), c);
    });
  }
  return out;
}

MultiTensorElt flip_legs(const MultiTensorElt& x) {
  if (x.legs() != 2) throw std::invalid_argument("flip_legs needs a 2-leg tensor");
  MultiTensorElt out(x.algebra(), 2);
  for (const auto& [k, c] : x.terms()) out.add_term(MultiWord{k[1], k[0]}, c);
  return out;
}

MultiTensorElt leg_to_multi(const LegTensor& x) {
  Combination<MultiWord> terms;
  for (const auto& [idx, c] : x.terms()) {
    MultiWord key(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] != kUnit) key[i].push_back(idx[i]);
    }
    terms.add(std::move(key), c);
  }
  return MultiTensorElt::from_terms(x.algebra(), x.legs(), std::move(terms));
}

LegTensor multi_to_leg(const MultiTensorElt& x) {
  if (x.legs() < 1) throw std::invalid_argument("multi_to_leg: need at least one leg");
  Combination<LegIndex> terms;
  for (const auto& [key, c] : x.terms()) {
    LegIndex idx(key.size());
    bool keep = true;
    for (std::size_t i = 0; i < key.size() && keep; ++i) {
      if (key[i].size() > 1) keep = false;
      else idx[i] = key[i].empty() ? kUnit : key[i].front();
    }
    if (keep) terms.add(std::move(idx), c);
  }
  return LegTensor::from_terms(x.algebra(), x.legs(), std::move(terms));
}

}  // namespace itohopf

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

#ifndef ITOHOPF_COMBINATION_HPP
#define ITOHOPF_COMBINATION_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "itohopf/scalar.hpp"

namespace itohopf {

// Finitely supported formal linear combination of keys. Zero coefficients
// are never stored, so two combinations are equal iff their maps are equal.
template <class Key>
class Combination {
 public:
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  Combination() = default;

  void add(const Key& key, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(Key&& key, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& map() const { return terms_; }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const Scalar& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  template <class Pred>
  Combination filtered(Pred keep) const {
    Combination out;
    for (const auto& kv : terms_) {
      if (keep(kv.first)) out.terms_.insert(kv);
    }
    return out;
  }

  friend bool operator==(const Combination& a, const Combination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

}  // namespace itohopf

#endif  // ITOHOPF_COMBINATION_HPP

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

#include "itohopf/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace itohopf {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

namespace {

bool is_integer_literal(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t.front() == '-' || t.front() == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view t) {
  if (!is_integer_literal(t)) {
    throw std::invalid_argument("malformed rational '" + std::string(t) + "'");
  }
  if (t.front() == '+') t.remove_prefix(1);
  return mpz_class(std::string(t), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("sign in denominator of '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

}  // namespace itohopf

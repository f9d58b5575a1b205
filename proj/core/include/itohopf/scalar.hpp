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

#ifndef ITOHOPF_SCALAR_HPP
#define ITOHOPF_SCALAR_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace itohopf {

/// Exact rational ground field. gmpxx keeps values canonical after every
/// arithmetic operation; values built from a raw numerator/denominator pair
/// must go through make_scalar().
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (q nonzero). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Renders as "p" when integral, otherwise "p/q".
std::string to_string(const Scalar& s);

}  // namespace itohopf

#endif  // ITOHOPF_SCALAR_HPP

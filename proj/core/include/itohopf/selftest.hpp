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

#ifndef ITOHOPF_SELFTEST_HPP
#define ITOHOPF_SELFTEST_HPP

#include <cstdint>

#include "itohopf/prodint.hpp"
#include "itohopf/report.hpp"

namespace itohopf {

struct SelftestOptions {
  int order = 3;
  std::uint64_t seed = 1;
  int trials = 20;
};

/// Runs the invariant suite on the given algebra and r, and on random data
/// over the same algebra. Each invariant becomes one check in the report.
Report run_selftest(const AlgebraPtr& alg, const RSeries& r, const SelftestOptions& opt);

}  // namespace itohopf

#endif  // ITOHOPF_SELFTEST_HPP

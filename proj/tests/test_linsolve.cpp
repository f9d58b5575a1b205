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

#include <gtest/gtest.h>

#include "itohopf/linsolve.hpp"
#include "itohopf/random.hpp"

using namespace itohopf;

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& x) {
  std::vector<Scalar> out;
  for (const auto& row : a) {
    Scalar s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
    out.push_back(s);
  }
  return out;
}

Matrix sq(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (long v : r) m.back().push_back(Scalar(v));
  }
  return m;
}

}  // namespace

TEST(SolveLinear, UniqueSolution) {
  const auto a = sq({{2, 1}, {1, 3}});
  const auto s = solve_linear(a, {Scalar(3), Scalar(5)});
  ASSERT_TRUE(s.consistent);
  EXPECT_TRUE(s.kernel.empty());
  EXPECT_TRUE(s.particular == (std::vector<Scalar>{make_scalar(4, 5), make_scalar(7, 5)}));
}

TEST(SolveLinear, Inconsistent) {
  const auto a = sq({{1, 1}, {2, 2}});
  const auto s = solve_linear(a, {Scalar(1), Scalar(3)});
  EXPECT_FALSE(s.consistent);
  EXPECT_TRUE(s.particular.empty());
}

TEST(SolveLinear, KernelAndFreeVariablesZero) {
  const auto a = sq({{1, 2, 3}, {2, 4, 6}});
  const auto s = solve_linear(a, {Scalar(6), Scalar(12)});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.kernel.size(), 2u);
  EXPECT_TRUE(s.particular == (std::vector<Scalar>{Scalar(6), Scalar(0), Scalar(0)}));
  for (const auto& k : s.kernel) EXPECT_TRUE(mat_vec(a, k) == (std::vector<Scalar>{Scalar(0), Scalar(0)}));
}

TEST(SolveLinear, ZeroAndEmptySystems) {
  const auto s = solve_linear(sq({{0, 0}}), {Scalar(0)});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.kernel.size(), 2u);
  EXPECT_FALSE(solve_linear(sq({{0, 0}}), {Scalar(1)}).consistent);
  EXPECT_THROW(solve_linear(sq({{1, 2}, {1}}), {Scalar(0), Scalar(0)}), std::invalid_argument);
  EXPECT_THROW(solve_linear(sq({{1, 2}}), {}), std::invalid_argument);
  EXPECT_THROW(solve_linear({}, {}), std::invalid_argument);
  const auto none = solve_linear({}, {}, 3);
  ASSERT_TRUE(none.consistent);
  EXPECT_EQ(none.particular.size(), 3u);
  EXPECT_EQ(none.kernel.size(), 3u);
}

TEST(SolveLinear, RandomRationalSystems) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const int rows = 1 + uniform_below(rng, 6);
    const int cols = 1 + uniform_below(rng, 6);
    Matrix a(static_cast<std::size_t>(rows), std::vector<Scalar>(static_cast<std::size_t>(cols)));
    for (auto& row : a) {
      for (auto& v : row) v = uniform_below(rng, 3) == 0 ? Scalar(0) : random_scalar(rng, 4, 3);
    }
    std::vector<Scalar> x0(static_cast<std::size_t>(cols));
    for (auto& v : x0) v = random_scalar(rng, 4, 3);
    const auto b = mat_vec(a, x0);
    const auto s = solve_linear(a, b);
    ASSERT_TRUE(s.consistent);
    EXPECT_TRUE(mat_vec(a, s.particular) == b);
    for (const auto& k : s.kernel) EXPECT_TRUE(mat_vec(a, k) == std::vector<Scalar>(static_cast<std::size_t>(rows)));
  }
}

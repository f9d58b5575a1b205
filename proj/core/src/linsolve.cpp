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

#include "itohopf/linsolve.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>

namespace itohopf {

LinearSolution solve_linear(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b) {
  if (a.empty()) throw std::invalid_argument("solve_linear: no rows; pass the column count");
  return solve_linear(a, b, a.front().size());
}

LinearSolution solve_linear(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                            std::size_t cols) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: right-hand side has the wrong length");

  // Augmented integer matrix.
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");
    mpz_class l = 1;
    for (const auto& x : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    m[i][cols] = b[i].get_num() * (l / b[i].get_den());
  }

  // Bareiss elimination to row echelon form.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  LinearSolution out;
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return out;
  }
  out.consistent = true;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  // Back substitution for a given right-hand column and free-variable values.
  auto back_substitute = [&](bool with_rhs, std::vector<Scalar> x) {
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t c = pivots[k];
      Scalar acc = with_rhs ? Scalar(m[k][cols]) : Scalar(0);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (m[k][j] != 0 && sgn(x[j]) != 0) acc -= Scalar(m[k][j]) * x[j];
      }
      x[c] = acc / Scalar(m[k][c]);
      x[c].canonicalize();
    }
    return x;
  };

  out.particular = back_substitute(true, std::vector<Scalar>(cols, Scalar(0)));
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(cols, Scalar(0));
    x[f] = 1;
    out.kernel.push_back(back_substitute(false, std::move(x)));
  }
  return out;
}

}  // namespace itohopf

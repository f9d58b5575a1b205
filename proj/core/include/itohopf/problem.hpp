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

#ifndef ITOHOPF_PROBLEM_HPP
#define ITOHOPF_PROBLEM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itohopf/algebra.hpp"
#include "itohopf/prodint.hpp"

namespace itohopf {

// Problem files are line oriented. Blank lines and text after '#' are
// ignored. Indices are 1-based; values are integers or p/q.
//
//   [algebra]
//   dim 2
//   basis L K
//   sc 1 2 1 1        e_1 e_2 has coefficient 1 on e_1
//   [rmatrix]
//   r 1 1 2 1         h^1 coefficient on e_1 (x) e_2
//   [options]
//   order 5
//   seed 1
//   trials 100

struct REntry {
  int order = 1;
  int left = 0;   // 0-based
  int right = 0;  // 0-based
  Scalar value;

  friend bool operator==(const REntry&, const REntry&) = default;
};

struct ProblemOptions {
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;

  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct ProblemFile {
  std::vector<std::string> basis;
  std::vector<StructureConstant> constants;  // 0-based, in file order
  std::vector<REntry> r_entries;             // in file order
  ProblemOptions options;

  int dim() const { return static_cast<int>(basis.size()); }

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_string(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);

std::string render_problem(const ProblemFile& p);

/// Algebra of the file without the associativity check.
AlgebraPtr build_algebra(const ProblemFile& p);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::array<int, 3> triple, const std::string& message);
  /// 1-based failing basis triple.
  const std::array<int, 3>& triple() const { return triple_; }

 private:
  std::array<int, 3> triple_;
};

/// build_algebra followed by check_associativity; throws ValidationError
/// naming the first failing triple.
AlgebraPtr validate_problem(const ProblemFile& p);

/// r as a series truncated at `order`. Entries above the order are skipped
/// and counted in *dropped when given.
RSeries build_r_series(const ProblemFile& p, const AlgebraPtr& alg, int order, int* dropped = nullptr);

/// LK = L, K^2 = K, L^2 = KL = 0 and r = h (L (x) K - K (x) L).
ProblemFile example_problem();

}  // namespace itohopf

#endif  // ITOHOPF_PROBLEM_HPP

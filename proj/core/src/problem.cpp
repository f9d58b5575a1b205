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

#include "itohopf/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace itohopf {

ParseError::ParseError(int line, std::string field, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + " (" + field + "): " + message),
      line_(line),
      field_(std::move(field)) {}

ValidationError::ValidationError(std::array<int, 3> triple, const std::string& message)
    : std::runtime_error(message), triple_(triple) {}

namespace {

enum class Section { none, algebra, rmatrix, options };

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_int(const std::string& s, int line, const std::string& field) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, field, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, field, "expected an integer, got '" + s + "'");
  return v;
}

Scalar parse_value(const std::string& s, int line, const std::string& field) {
  try {
    return parse_scalar(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, field, e.what());
  }
}

void expect_args(const std::vector<std::string>& tok, std::size_t n, int line) {
  if (tok.size() != n + 1) {
    throw ParseError(line, tok[0], "expected " + std::to_string(n) + " value(s), got " + std::to_string(tok.size() - 1));
  }
}

}  // namespace

ProblemFile parse_problem(std::istream& in) {
  ProblemFile p;
  Section section = Section::none;
  std::optional<int> dim;
  int dim_line = 0;
  bool have_basis = false;
  std::set<Section> seen_sections;
  std::set<std::tuple<int, int, int>> seen_sc;
  std::set<std::tuple<int, int, int>> seen_r;
  std::vector<int> sc_lines;
  std::vector<int> r_lines;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto tok = split(raw);
    if (tok.empty()) continue;

    if (tok[0].front() == '[') {
      if (tok.size() != 1) throw ParseError(line, "section", "unexpected text after section header");
      if (tok[0] == "[algebra]") section = Section::algebra;
      else if (tok[0] == "[rmatrix]") section = Section::rmatrix;
      else if (tok[0] == "[options]") section = Section::options;
      else throw ParseError(line, "section", "unknown section " + tok[0]);
      if (!seen_sections.insert(section).second) throw ParseError(line, "section", "repeated section " + tok[0]);
      continue;
    }

    const std::string& key = tok[0];
    switch (section) {
      case Section::none:
        throw ParseError(line, key, "entry outside of any section");
      case Section::algebra:
        if (key == "dim") {
          expect_args(tok, 1, line);
          if (dim) throw ParseError(line, key, "repeated dim");
          const long d = parse_int(tok[1], line, key);
          if (d < 1) throw ParseError(line, key, "dim must be positive");
          dim = static_cast<int>(d);
          dim_line = line;
        } else if (key == "basis") {
          if (have_basis) throw ParseError(line, key, "repeated basis");
          if (tok.size() < 2) throw ParseError(line, key, "no basis names");
          p.basis.assign(tok.begin() + 1, tok.end());
          std::set<std::string> names(p.basis.begin(), p.basis.end());
          if (names.size() != p.basis.size()) throw ParseError(line, key, "basis names must be distinct");
          have_basis = true;
        } else if (key == "sc") {
          expect_args(tok, 4, line);
          const int i = static_cast<int>(parse_int(tok[1], line, "sc.left")) - 1;
          const int j = static_cast<int>(parse_int(tok[2], line, "sc.right")) - 1;
          const int k = static_cast<int>(parse_int(tok[3], line, "sc.result")) - 1;
          const Scalar v = parse_value(tok[4], line, "sc.value");
          if (!seen_sc.emplace(i, j, k).second) throw ParseError(line, key, "duplicate structure constant");
          p.constants.push_back({i, j, k, v});
          sc_lines.push_back(line);
        } else {
          throw ParseError(line, key, "unknown algebra entry");
        }
        break;
      case Section::rmatrix:
        if (key != "r") throw ParseError(line, key, "unknown rmatrix entry");
        {
          expect_args(tok, 4, line);
          const int k = static_cast<int>(parse_int(tok[1], line, "r.order"));
          const int i = static_cast<int>(parse_int(tok[2], line, "r.left")) - 1;
          const int j = static_cast<int>(parse_int(tok[3], line, "r.right")) - 1;
          const Scalar v = parse_value(tok[4], line, "r.value");
          if (k < 1) throw ParseError(line, "r.order", "h-order must be at least 1");
          if (!seen_r.emplace(k, i, j).second) throw ParseError(line, key, "duplicate r entry");
          p.r_entries.push_back({k, i, j, v});
          r_lines.push_back(line);
        }
        break;
      case Section::options: {
        expect_args(tok, 1, line);
        const long v = parse_int(tok[1], line, key);
        if (key == "order") {
          if (p.options.order) throw ParseError(line, key, "repeated option");
          if (v < 0) throw ParseError(line, key, "order must be nonnegative");
          p.options.order = static_cast<int>(v);
        } else if (key == "seed") {
          if (p.options.seed) throw ParseError(line, key, "repeated option");
          if (v < 0) throw ParseError(line, key, "seed must be nonnegative");
          p.options.seed = static_cast<std::uint64_t>(v);
        } else if (key == "trials") {
          if (p.options.trials) throw ParseError(line, key, "repeated option");
          if (v < 0) throw ParseError(line, key, "trials must be nonnegative");
          p.options.trials = static_cast<int>(v);
        } else {
          throw ParseError(line, key, "unknown option");
        }
        break;
      }
    }
  }

  if (!dim) throw ParseError(line, "dim", "missing dim in [algebra]");
  if (have_basis) {
    if (static_cast<int>(p.basis.size()) != *dim) {
      throw ParseError(dim_line, "basis", "basis has " + std::to_string(p.basis.size()) + " names, dim is " +
                                              std::to_string(*dim));
    }
  } else {
    for (int i = 1; i <= *dim; ++i) p.basis.push_back("e" + std::to_string(i));
  }
  auto in_range = [&](int i) { return i >= 0 && i < *dim; };
  for (std::size_t n = 0; n < p.constants.size(); ++n) {
    const auto& c = p.constants[n];
    if (!in_range(c.left) || !in_range(c.right) || !in_range(c.result)) {
      throw ParseError(sc_lines[n], "sc", "index out of range 1.." + std::to_string(*dim));
    }
  }
  for (std::size_t n = 0; n < p.r_entries.size(); ++n) {
    const auto& e = p.r_entries[n];
    if (!in_range(e.left) || !in_range(e.right)) {
      throw ParseError(r_lines[n], "r", "index out of range 1.." + std::to_string(*dim));
    }
  }
  return p;
}

ProblemFile parse_problem_string(const std::string& text) {
  std::istringstream in(text);
  return parse_problem(in);
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_problem(in);
}

std::string render_problem(const ProblemFile& p) {
  std::ostringstream out;
  out << "[algebra]\ndim " << p.dim() << "\nbasis";
  for (const auto& b : p.basis) out << ' ' << b;
  out << '\n';
  for (const auto& c : p.constants) {
    out << "sc " << c.left + 1 << ' ' << c.right + 1 << ' ' << c.result + 1 << ' ' << to_string(c.value) << '\n';
  }
  out << "[rmatrix]\n";
  for (const auto& e : p.r_entries) {
    out << "r " << e.order << ' ' << e.left + 1 << ' ' << e.right + 1 << ' ' << to_string(e.value) << '\n';
  }
  out << "[options]\n";
  if (p.options.order) out << "order " << *p.options.order << '\n';
  if (p.options.seed) out << "seed " << *p.options.seed << '\n';
  if (p.options.trials) out << "trials " << *p.options.trials << '\n';
  return out.str();
}

AlgebraPtr build_algebra(const ProblemFile& p) {
  std::vector<StructureConstant> nonzero;
  for (const auto& c : p.constants) {
    if (sgn(c.value) != 0) nonzero.push_back(c);
  }
  return AlgebraDef::create(p.basis, nonzero);
}

AlgebraPtr validate_problem(const ProblemFile& p) {
  auto alg = build_algebra(p);
  const auto rep = check_associativity(*alg);
  if (!rep.ok()) {
    const auto& t = rep.failures.front();
    const std::array<int, 3> one_based{t[0] + 1, t[1] + 1, t[2] + 1};
    throw ValidationError(one_based, "structure constants are not associative at basis triple (" +
                                         std::to_string(one_based[0]) + ", " + std::to_string(one_based[1]) + ", " +
                                         std::to_string(one_based[2]) + ")");
  }
  return alg;
}

RSeries build_r_series(const ProblemFile& p, const AlgebraPtr& alg, int order, int* dropped) {
  RSeries r(order, LegTensor(alg, 2));
  int skipped = 0;
  for (const auto& e : p.r_entries) {
    if (e.order > order) {
      ++skipped;
      continue;
    }
    r[e.order].add_term({e.left, e.right}, e.value);
  }
  if (dropped != nullptr) *dropped = skipped;
  return r;
}

ProblemFile example_problem() {
  ProblemFile p;
  p.basis = {"L", "K"};
  p.constants = {{0, 1, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}};
  p.r_entries = {{1, 0, 1, Scalar(1)}, {1, 1, 0, Scalar(-1)}};
  return p;
}

}  // namespace itohopf

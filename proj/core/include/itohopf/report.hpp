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

#ifndef ITOHOPF_REPORT_HPP
#define ITOHOPF_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itohopf/algebra.hpp"
#include "itohopf/hseries.hpp"
#include "itohopf/tensor.hpp"
#include "itohopf/ybe.hpp"

namespace itohopf {

/// Letters joined by spaces; the empty word renders as "1".
std::string render_word(const AlgebraDef& def, const Word& w);

/// Legs joined by " | ".
std::string render_key(const AlgebraDef& def, const MultiWord& key);

/// One line per term: "<order>\t<legs>\t<coefficient>", sorted by order and
/// then by key.
std::vector<std::string> dump_lines(const HSeries<MultiTensorElt>& x);
std::vector<std::string> dump_lines(const HSeries<LegTensor>& x);
std::vector<std::string> dump_lines(const MultiTensorElt& x, int order);

/// "1,2,0"
std::string render_rank(const std::vector<int>& rank);

/// Results of one CLI run. The machine rendering contains no timings, so it
/// is identical for identical inputs.
class Report {
 public:
  struct Check {
    std::string name;
    bool holds;
    std::vector<std::string> detail;
  };

  void set_header(const std::string& key, const std::string& value);
  void add_check(const std::string& name, bool holds, std::vector<std::string> detail = {});
  /// Adds a check from a comparison, with its witness when it fails.
  void add_check(const std::string& name, const YbeReport& rep);
  void add_section(const std::string& name, std::vector<std::string> lines);
  void add_note(const std::string& text);

  bool all_hold() const;
  /// Name of the first failing check.
  std::optional<std::string> first_failure() const;
  const std::vector<Check>& checks() const { return checks_; }

  std::string machine() const;
  /// The machine text plus the given timings.
  std::string human(const std::vector<std::pair<std::string, double>>& timings) const;

 private:
  std::vector<std::pair<std::string, std::string>> header_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::vector<std::string>>> sections_;
  std::vector<std::string> notes_;
  // Order in which checks and sections were added: (is_section, index).
  std::vector<std::pair<bool, std::size_t>> order_;
};

}  // namespace itohopf

#endif  // ITOHOPF_REPORT_HPP

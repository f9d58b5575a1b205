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

#include "itohopf/report.hpp"

#include <cstdio>
#include <sstream>

namespace itohopf {

std::string render_word(const AlgebraDef& def, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += def.name(w[i]);
  }
  return out;
}

std::string render_key(const AlgebraDef& def, const MultiWord& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += " | ";
    out += render_word(def, key[i]);
  }
  return out;
}

std::vector<std::string> dump_lines(const MultiTensorElt& x, int order) {
  std::vector<std::string> out;
  for (const auto& [key, c] : x.terms()) {
    out.push_back(std::to_string(order) + "\t" + render_key(*x.algebra(), key) + "\t" + to_string(c));
  }
  return out;
}

std::vector<std::string> dump_lines(const HSeries<MultiTensorElt>& x) {
  std::vector<std::string> out;
  for (int k = 0; k <= x.order(); ++k) {
    auto lines = dump_lines(x[k], k);
    out.insert(out.end(), lines.begin(), lines.end());
  }
  return out;
}

std::vector<std::string> dump_lines(const HSeries<LegTensor>& x) {
  std::vector<std::string> out;
  for (int k = 0; k <= x.order(); ++k) {
    auto lines = dump_lines(leg_to_multi(x[k]), k);
    out.insert(out.end(), lines.begin(), lines.end());
  }
  return out;
}

std::string render_rank(const std::vector<int>& rank) {
  std::string out;
  for (std::size_t i = 0; i < rank.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(rank[i]);
  }
  return out;
}

void Report::set_header(const std::string& key, const std::string& value) {
  for (auto& kv : header_) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  header_.emplace_back(key, value);
}

void Report::add_check(const std::string& name, bool holds, std::vector<std::string> detail) {
  order_.emplace_back(false, checks_.size());
  checks_.push_back({name, holds, std::move(detail)});
}

void Report::add_check(const std::string& name, const YbeReport& rep) {
  std::vector<std::string> detail;
  if (!rep.holds) {
    detail.push_back("order " + std::to_string(rep.order));
    detail.push_back("rank " + render_rank(rep.joint_rank));
    if (rep.residual) {
      for (auto& line : dump_lines(*rep.residual, rep.order)) detail.push_back("residual\t" + line);
    }
  }
  add_check(name, rep.holds, std::move(detail));
}

void Report::add_section(const std::string& name, std::vector<std::string> lines) {
  order_.emplace_back(true, sections_.size());
  sections_.emplace_back(name, std::move(lines));
}

void Report::add_note(const std::string& text) { notes_.push_back(text); }

bool Report::all_hold() const { return !first_failure().has_value(); }

std::optional<std::string> Report::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.holds) return c.name;
  }
  return std::nullopt;
}

std::string Report::machine() const {
  std::ostringstream out;
  out << "itohopf-report 1\n";
  for (const auto& [k, v] : header_) out << k << ' ' << v << '\n';
  for (const auto& n : notes_) out << "note " << n << '\n';
  for (const auto& [is_section, i] : order_) {
    if (is_section) {
      const auto& [name, lines] = sections_[i];
      out << "begin " << name << '\n';
      for (const auto& l : lines) out << l << '\n';
      out << "end " << name << '\n';
    } else {
      const auto& c = checks_[i];
      out << "check " << c.name << ' ' << (c.holds ? "holds" : "fails") << '\n';
      for (const auto& d : c.detail) out << "  " << d << '\n';
    }
  }
  out << "result " << (all_hold() ? "holds" : "fails") << '\n';
  return out.str();
}

std::string Report::human(const std::vector<std::pair<std::string, double>>& timings) const {
  std::string out = machine();
  for (const auto& [name, seconds] : timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    out += "time " + name + " " + buf + "s\n";
  }
  return out;
}

}  // namespace itohopf

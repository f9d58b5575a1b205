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

// Command-line driver: reads a problem file (or a bundled fixture), runs one
// command and prints a report. Exit status is 0 iff every check holds, 1 if
// some check fails and 2 for usage, parse or validation errors.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "itohopf/linsolve.hpp"
#include "itohopf/problem.hpp"
#include "itohopf/quantise.hpp"
#include "itohopf/report.hpp"
#include "itohopf/selftest.hpp"
#include "itohopf/ybe.hpp"

using namespace itohopf;

namespace {

struct Run {
  ProblemFile problem;
  AlgebraPtr alg;
  int order = 5;
  std::uint64_t seed = 1;
  int trials = 20;
  int grid_limit = 8;
  std::string basis_name;
  Report report;
  std::vector<std::pair<std::string, double>> timings;

  RSeries r() {
    int dropped = 0;
    auto out = build_r_series(problem, alg, order, &dropped);
    if (dropped > 0) report.add_note("ignored " + std::to_string(dropped) + " r entries above order " + std::to_string(order));
    return out;
  }

  template <class F>
  auto timed(const std::string& name, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto out = f();
    timings.emplace_back(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return out;
  }
};

// "<legs>\t<coefficient>" per term.
std::vector<std::string> leg_lines(const LegTensor& x) {
  std::vector<std::string> out;
  const MultiTensorElt m = leg_to_multi(x);
  for (const auto& [key, c] : m.terms()) out.push_back(render_key(*x.algebra(), key) + "\t" + to_string(c));
  return out;
}

void cmd_check_assoc(Run& run) {
  const auto rep = check_associativity(*run.alg);
  std::vector<std::string> detail;
  for (const auto& t : rep.failures) {
    detail.push_back("triple " + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1));
  }
  run.report.add_check("associativity", rep.ok(), detail);
}

void cmd_cybe(Run& run) {
  const auto r = run.r();
  if (r.order() < 1) throw std::invalid_argument("cybe needs order >= 1");
  run.report.add_check("cybe", run.timed("cybe", [&] { return cybe_check(r[1]); }));
}

void cmd_qybe_toy(Run& run) {
  const auto r = run.r();
  run.report.add_check("qybe_toy", run.timed("qybe_toy", [&] { return toy_qybe_check(r); }));
}

void cmd_dpi(Run& run) {
  const auto r = run.r();
  try {
    const auto big_r = run.timed("double_fb", [&] { return double_fb(r); });
    run.report.add_check("constructions_agree", true);
    run.report.add_section("R", dump_lines(big_r.series));
  } catch (const std::logic_error& e) {
    run.report.add_check("constructions_agree", false, {std::string("error ") + e.what()});
  }
}

void cmd_qybe(Run& run) {
  const auto r = run.r();
  const auto big_r = run.timed("double_fb", [&] { return double_fb(r); });
  run.report.add_check("qybe", run.timed("qybe", [&] { return qybe_check(big_r.series); }));
}

void cmd_inverse(Run& run) {
  const auto r = run.r();
  const auto ctx = run.timed("context", [&] { return build_context(r, false); });
  const auto rep = run.timed("inverse", [&] { return check_inverse(ctx); });
  run.report.add_check("quasi_inverse_left", rep.quasi_inverse_left);
  run.report.add_check("quasi_inverse_right", rep.quasi_inverse_right);
  run.report.add_check("right_inverse", rep.right_inverse);
  run.report.add_check("left_inverse", rep.left_inverse);
  run.report.add_check("matches_series_invert", rep.matches_series_invert);
}

void cmd_hierarchy(Run& run) {
  const auto r = run.r();
  if (r.order() < 1) throw std::invalid_argument("hierarchy needs order >= 1");
  run.report.add_check("order_1_classical", cybe_check(r[1]));
  std::vector<LegTensor> coeffs{r[1]};
  for (int n = 2; n <= run.order; ++n) {
    const auto s = run.timed("solve_" + std::to_string(n), [&] { return hierarchy_solve(coeffs); });
    const std::string name = "order_" + std::to_string(n) + "_consistent";
    if (!s.consistent) {
      run.report.add_check(name, false);
      return;
    }
    run.report.add_check(name, true, {"kernel_dimension " + std::to_string(s.kernel.size())});
    run.report.add_section("particular_" + std::to_string(n), leg_lines(*s.particular));
    for (std::size_t i = 0; i < s.kernel.size(); ++i) {
      run.report.add_section("kernel_" + std::to_string(n) + "_" + std::to_string(i + 1), leg_lines(s.kernel[i]));
    }
    coeffs.push_back(*s.particular);
  }
}

AlgebraElt basis_element(const Run& run) {
  const auto idx = run.alg->index_of(run.basis_name);
  if (!idx) throw std::invalid_argument("unknown basis element '" + run.basis_name + "'");
  return AlgebraElt::basis(run.alg, *idx);
}

void cmd_deform(Run& run) {
  const auto x = basis_element(run);
  const auto r = run.r();
  const auto ctx = run.timed("context", [&] { return build_context(r); });
  const auto a = TensorElt::from_element(x);
  try {
    const auto d = run.timed("deform", [&] { return deformed_coproduct(ctx, a, run.grid_limit); });
    for (const auto& w : d.warnings) run.report.add_note(w);
    run.report.add_check("grid_cross_check", true, {"max_total_rank " + std::to_string(run.grid_limit)});
    for (const auto& [m, n] : d.joint_ranks()) {
      run.report.add_section("component " + std::to_string(m) + "," + std::to_string(n), dump_lines(d.component(m, n)));
    }
  } catch (const std::logic_error& e) {
    run.report.add_check("grid_cross_check", false, {std::string("error ") + e.what()});
  }
}

void cmd_coassoc(Run& run) {
  const auto r = run.r();
  const auto ctx = run.timed("context", [&] { return build_context(r); });
  for (int i = 0; i < run.alg->dim(); ++i) {
    const auto a = TensorElt::word(run.alg, {i});
    run.report.add_check("coassociative " + run.alg->name(i),
                         run.timed("coassoc_" + run.alg->name(i), [&] { return coassociativity_check(ctx, a); }));
  }
}

void cmd_cobracket(Run& run) {
  const auto r = run.r();
  if (r.order() < 1) throw std::invalid_argument("cobracket needs order >= 1");
  const auto ctx = run.timed("context", [&] { return build_context(truncate(r, 1)); });
  for (int i = 0; i < run.alg->dim(); ++i) {
    const std::string name = run.alg->name(i);
    try {
      const auto delta = cobracket(ctx, AlgebraElt::basis(run.alg, i));
      run.report.add_check("closed_form " + name, true);
      run.report.add_check("skew " + name, (delta + flip_21(delta)).is_zero());
      run.report.add_section("cobracket " + name, leg_lines(delta));
    } catch (const std::logic_error& e) {
      run.report.add_check("closed_form " + name, false, {std::string("error ") + e.what()});
    }
  }
}

void cmd_selftest(Run& run) {
  const auto r = run.r();
  const SelftestOptions opt{run.order, run.seed, run.trials};
  run.report = run.timed("selftest", [&] { return run_selftest(run.alg, r, opt); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ito Hopf algebra computations: double product integrals, Yang-Baxter checks and deformed coproducts"};
  app.require_subcommand(1);

  std::string problem_path;
  std::string fixture;
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string report_path;
  int grid_limit = 8;
  std::string basis_name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", problem_path, "Problem file");
    sub->add_option("--fixture", fixture, "Bundled problem instead of a file")->check(CLI::IsMember({"example_sec6"}));
    sub->add_option("--order", order, "Truncation order N (default: file value or 5)")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "Random seed (default: file value or 1)");
    sub->add_option("--trials", trials, "Random trials for selftest (default: file value or 20)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--report", report_path, "Write the machine-readable report here");
  };

  struct Command {
    const char* name;
    const char* help;
    std::function<void(Run&)> fn;
  };
  const std::vector<Command> commands{
      {"check-assoc", "Check associativity of the structure constants", cmd_check_assoc},
      {"cybe", "Classical Yang-Baxter equation for r_1", cmd_cybe},
      {"qybe-toy", "Quantum Yang-Baxter equation for 1 + r over the unitalization", cmd_qybe_toy},
      {"dpi", "Compute and dump the double product R to order N", cmd_dpi},
      {"qybe", "Quantum Yang-Baxter equation for R over T(L)", cmd_qybe},
      {"inverse", "Check that the reversed double product of the quasi-inverse inverts R", cmd_inverse},
      {"hierarchy", "Solve for r_2 .. r_N from r_1", cmd_hierarchy},
      {"deform", "Dump the deformed coproduct of a basis element by joint rank", cmd_deform},
      {"coassoc", "Coassociativity of the deformed coproduct on each basis element", cmd_coassoc},
      {"cobracket", "First-order cobracket of each basis element", cmd_cobracket},
      {"selftest", "Run the invariant suite", cmd_selftest},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "deform") {
      sub->add_option("basis", basis_name, "Basis element name")->required();
      sub->add_option("--grid-limit", grid_limit, "Cross-check joint ranks with m + n up to this (-1: off)")
          ->check(CLI::Range(-1, 1000));
    }
    add_common(sub);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::size_t chosen = 0;
  while (!subs[chosen]->parsed()) ++chosen;

  Run run;
  try {
    if (!fixture.empty() == !problem_path.empty()) {
      throw std::invalid_argument("give exactly one of a problem file or --fixture");
    }
    run.problem = fixture.empty() ? parse_problem_file(problem_path) : example_problem();
    run.alg = validate_problem(run.problem);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  run.order = order.value_or(run.problem.options.order.value_or(5));
  run.seed = seed.value_or(run.problem.options.seed.value_or(1));
  run.trials = trials.value_or(run.problem.options.trials.value_or(20));
  run.grid_limit = grid_limit;
  run.basis_name = basis_name;
  if (run.order > 8 && run.alg->dim() >= 3) {
    std::cerr << "warning: order " << run.order << " with dim " << run.alg->dim() << " may be very slow\n";
  }

  try {
    commands[chosen].fn(run);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  run.report.set_header("command", commands[chosen].name);
  run.report.set_header("order", std::to_string(run.order));
  run.report.set_header("seed", std::to_string(run.seed));
  if (std::string(commands[chosen].name) == "selftest") run.report.set_header("trials", std::to_string(run.trials));

  std::cout << run.report.human(run.timings);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << '\n';
      return 2;
    }
    out << run.report.machine();
  }
  if (const auto bad = run.report.first_failure()) {
    std::cerr << "failed: " << *bad << '\n';
    return 1;
  }
  return 0;
}

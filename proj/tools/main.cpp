// Copyright 2026 The specdom Authors
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

// Command-line front end.  Exit codes: 0 success / true verdict, 2 failed
// verdict or violated law (with a machine-readable witness on stdout),
// 3 divergence or missing convergence, 4 malformed input.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "specdom/errors.hpp"
#include "specdom/galois.hpp"
#include "specdom/ivp.hpp"
#include "specdom/lattice.hpp"
#include "specdom/sampling.hpp"
#include "specdom/serialization.hpp"
#include "specdom/step_function.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFail = 2;
constexpr int kDiverged = 3;
constexpr int kInputError = 4;

using nlohmann::json;
using namespace specdom;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::size_t cap_lattice = 4096;
  std::size_t cap_subsets = 20;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Primary output goes to --out when given, stdout otherwise.
void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write file: " + g.out);
  out << text;
}

int run_duality_roundtrip(const GlobalOpts& g, const std::string& path) {
  FinDistLattice L = lattice_from_json(read_file(path));
  RoundtripReport rep = roundtrip_iso_check(L);
  json out{{"isomorphic", rep.isomorphic},
           {"points", rep.points},
           {"opens", rep.opens}};
  emit(g, out.dump());
  return rep.isomorphic ? kOk : kVerdictFail;
}

int run_stepfn_eval(const GlobalOpts& g, const std::string& lhs,
                    const std::string& at) {
  StepFn f = stepfn_from_json(read_file(lhs));
  Box v = eval(f, Rational::parse(at));
  json out{{"value", json::parse(box_to_json(v))}, {"rendered", v.str()}};
  emit(g, out.dump());
  return kOk;
}

int run_stepfn_order(const GlobalOpts& g, const std::string& lhs,
                     const std::string& rhs, const std::string& strategy) {
  StepFn f = stepfn_from_json(read_file(lhs));
  StepFn gg = stepfn_from_json(read_file(rhs));
  OrderVerdict v = strategy == "primefilters"
                       ? order_primefilters(f, gg, g.cap_lattice)
                       : order_cells(f, gg);
  json out{{"holds", v.holds}, {"strategy", strategy}};
  if (v.witness) out["witness"] = *v.witness;
  emit(g, out.dump());
  return v.holds ? kOk : kVerdictFail;
}

int run_stepfn_waybelow(const GlobalOpts& g, const std::string& lhs,
                        const std::string& rhs, const std::string& strategy) {
  StepFn f = stepfn_from_json(read_file(lhs));
  StepFn gg = stepfn_from_json(read_file(rhs));
  WayBelowStrategy ws = strategy == "absbasis" ? WayBelowStrategy::AbsBasis
                                               : WayBelowStrategy::Spectral;
  OrderVerdict v = way_below(f, gg, ws, g.cap_subsets);
  json out{{"holds", v.holds}, {"strategy", strategy}};
  if (v.witness) out["witness"] = *v.witness;
  emit(g, out.dump());
  return v.holds ? kOk : kVerdictFail;
}

int run_galois_check(const GlobalOpts& g, const std::string& f_path,
                     const std::string& g_path) {
  StepFn f = stepfn_from_json(read_file(f_path));
  StepFn gg = stepfn_from_json(read_file(g_path));
  AdjunctionVerdict v = adjunction_check(gg, f);
  json out{{"restrict_below", v.restrict_below},
           {"envelope_above", v.envelope_above},
           {"agree", v.agree}};
  if (v.left_witness) out["left_witness"] = *v.left_witness;
  if (v.right_witness) out["right_witness"] = *v.right_witness;
  emit(g, out.dump());
  return v.agree ? kOk : kVerdictFail;
}

int run_galois_fuzz(const GlobalOpts& g, int n) {
  Sampler sampler(g.seed);
  Carrier carrier(Rational(0), Rational(3));
  for (int i = 0; i < n; ++i) {
    int dim = sampler.uniform_int(1, 2);
    StepFn gg = sampler.stepfn(carrier, dim);
    StepFn f = sampler.stepfn(carrier, dim);
    AdjunctionVerdict v = adjunction_check(gg, f);
    if (!v.agree) {
      json out{{"law", "adjunction"},
               {"iteration", i},
               {"restrict_below", v.restrict_below},
               {"envelope_above", v.envelope_above},
               {"g", json::parse(stepfn_to_json(gg))},
               {"f", json::parse(stepfn_to_json(f))}};
      emit(g, out.dump());
      return kVerdictFail;
    }
    GaloisRoundtrip rt = galois_roundtrip_check(f);
    if (!rt.equal) {
      json out{{"law", "envelope-roundtrip"},
               {"iteration", i},
               {"witness", rt.witness ? *rt.witness : ""},
               {"f", json::parse(stepfn_to_json(f))}};
      emit(g, out.dump());
      return kVerdictFail;
    }
  }
  std::ostringstream line;
  line << "agreements: " << n << "/" << n << " (seed " << g.seed << ")";
  emit(g, line.str());
  return kOk;
}

int run_ivp_solve(const GlobalOpts& g, const std::string& problem_path,
                  int pieces) {
  IvpProblem p = problem_from_json(read_file(problem_path), pieces);
  SolveResult r = solve_fixpoint(p);
  emit(g, enclosure_csv(p, r.enclosure));
  return kOk;
}

int run_ivp_convergence(const GlobalOpts& g, const std::string& problem_path,
                        int levels) {
  IvpProblem base = problem_from_json(read_file(problem_path), 1);
  std::ostringstream out;
  char buf[64];
  Rational prev_width(0);
  bool have_prev = false;
  for (int level = 0; level < levels; ++level) {
    int k = 4 << level;
    IvpProblem p = make_ivp(base.field, base.y0, base.t0, base.t1, k);
    SolveResult r = solve_fixpoint(p);
    auto width = enclosure_width(r.enclosure);
    if (!width) throw NoConvergence("solver left an unbounded piece");
    out << "k=" << k << " width=" << width->str();
    std::snprintf(buf, sizeof buf, " (~%.6g)", width->approx());
    out << buf;
    if (have_prev) {
      Rational ratio = *width / prev_width;
      std::snprintf(buf, sizeof buf, " ratio=%.6g", ratio.approx());
      out << buf;
    } else {
      out << " ratio=-";
    }
    out << "\n";
    prev_width = *width;
    have_prev = true;
  }
  emit(g, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact interval domains over rational half-open covers: finite "
      "duality checks, step-function calculus, adjunction laws, and a "
      "validated initial-value solver."};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "Seed for randomized suites")
      ->capture_default_str();
  app.add_option("--cap-lattice", g.cap_lattice,
                 "Element cap for generated lattices")
      ->capture_default_str();
  app.add_option("--cap-subsets", g.cap_subsets,
                 "Component cap for subset enumeration")
      ->capture_default_str();
  app.add_option("--out", g.out, "Write primary output to this file");

  std::function<int()> action;

  auto* duality = app.add_subcommand("duality", "Finite duality checks");
  {
    auto* roundtrip = duality->add_subcommand(
        "roundtrip", "Lattice -> prime-filter space -> lattice");
    auto lattice = std::make_shared<std::string>();
    roundtrip->add_option("--lattice", *lattice, "Lattice JSON file")
        ->required();
    roundtrip->callback(
        [&, lattice] { action = [&, lattice] { return run_duality_roundtrip(g, *lattice); }; });
  }

  auto* stepfn = app.add_subcommand("stepfn", "Step-function calculus");
  {
    auto* ev = stepfn->add_subcommand("eval", "Value at a rational point");
    auto lhs = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    ev->add_option("--lhs", *lhs, "Step function JSON file")->required();
    ev->add_option("--at", *at, "Evaluation point (rational)")->required();
    ev->callback(
        [&, lhs, at] { action = [&, lhs, at] { return run_stepfn_eval(g, *lhs, *at); }; });

    auto* ord = stepfn->add_subcommand("order", "Pointwise order test");
    auto olhs = std::make_shared<std::string>();
    auto orhs = std::make_shared<std::string>();
    auto ostrat = std::make_shared<std::string>("cells");
    ord->add_option("--lhs", *olhs, "Left step function JSON file")->required();
    ord->add_option("--rhs", *orhs, "Right step function JSON file")
        ->required();
    ord->add_option("--strategy", *ostrat, "cells | primefilters")
        ->check(CLI::IsMember({"cells", "primefilters"}))
        ->capture_default_str();
    ord->callback([&, olhs, orhs, ostrat] {
      action = [&, olhs, orhs, ostrat] {
        return run_stepfn_order(g, *olhs, *orhs, *ostrat);
      };
    });

    auto* wb = stepfn->add_subcommand("waybelow", "Way-below test");
    auto wlhs = std::make_shared<std::string>();
    auto wrhs = std::make_shared<std::string>();
    auto wstrat = std::make_shared<std::string>("spectral");
    wb->add_option("--lhs", *wlhs, "Left step function JSON file")->required();
    wb->add_option("--rhs", *wrhs, "Right step function JSON file")
        ->required();
    wb->add_option("--strategy", *wstrat, "spectral | absbasis")
        ->check(CLI::IsMember({"spectral", "absbasis"}))
        ->capture_default_str();
    wb->callback([&, wlhs, wrhs, wstrat] {
      action = [&, wlhs, wrhs, wstrat] {
        return run_stepfn_waybelow(g, *wlhs, *wrhs, *wstrat);
      };
    });
  }

  auto* galois = app.add_subcommand("galois", "Adjunction between the "
                                              "function spaces");
  {
    auto* check = galois->add_subcommand("check", "Adjunction verdict for "
                                                  "one pair");
    auto fpath = std::make_shared<std::string>();
    auto gpath = std::make_shared<std::string>();
    check->add_option("--f", *fpath, "Concrete-side step function JSON file")
        ->required();
    check->add_option("--g", *gpath, "Spectral-side step function JSON file")
        ->required();
    check->callback([&, fpath, gpath] {
      action = [&, fpath, gpath] { return run_galois_check(g, *fpath, *gpath); };
    });

    auto* fuzz = galois->add_subcommand("fuzz", "Randomized law suite");
    auto n = std::make_shared<int>(1000);
    fuzz->add_option("--n", *n, "Number of sampled pairs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fuzz->callback(
        [&, n] { action = [&, n] { return run_galois_fuzz(g, *n); }; });
  }

  auto* ivp = app.add_subcommand("ivp", "Validated initial-value solving");
  {
    auto* solve = ivp->add_subcommand("solve", "Solve and print the "
                                               "enclosure as CSV");
    auto problem = std::make_shared<std::string>();
    auto pieces = std::make_shared<int>(16);
    solve->add_option("--problem", *problem, "Problem JSON file")->required();
    solve->add_option("--pieces", *pieces, "Uniform partition size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    solve->callback([&, problem, pieces] {
      action = [&, problem, pieces] {
        return run_ivp_solve(g, *problem, *pieces);
      };
    });

    auto* conv = ivp->add_subcommand("convergence", "Enclosure width per "
                                                    "partition level");
    auto cproblem = std::make_shared<std::string>();
    auto levels = std::make_shared<int>(5);
    conv->add_option("--problem", *cproblem, "Problem JSON file")->required();
    conv->add_option("--levels", *levels,
                     "Partition levels k = 4, 8, ... (doubling)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    conv->callback([&, cproblem, levels] {
      action = [&, cproblem, levels] {
        return run_ivp_convergence(g, *cproblem, *levels);
      };
    });
  }

  // Let the global flags (--seed, --out, ...) appear after the subcommand,
  // the way the documented invocations write them.
  for (auto* group : {duality, stepfn, galois, ivp}) {
    group->require_subcommand(1);
    group->fallthrough();
    for (auto* leaf : group->get_subcommands(nullptr)) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const DivergenceBound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiverged;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiverged;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

// Copyright 2026 The sic4 Authors
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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "sic4/reports.hpp"

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification runs for the four-dimensional SIC-POVM orbit."};
  app.require_subcommand(1);

  double tol = 1e-9;
  std::string basis = "product";
  std::string format = "text";
  std::string out;
  bool full_scan = false;
  std::string input;

  const std::map<std::string, std::string> help{
      {"orbit", "fiducial orbit and Clifford group orders"},
      {"symmetry", "SIC permutation group and its quotient"},
      {"triples", "triple-product census"},
      {"reconstruct", "recover the covariance group from a SIC"},
      {"regroup", "regrouped SICs and the subgroup census"},
      {"twoqubit", "two-qubit sign patterns and entanglement"},
      {"all", "every subcommand above"},
  };
  for (const auto& name : sic4::subcommands()) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--tol", tol, "absolute tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--basis", basis, "two-qubit basis")->check(CLI::IsMember({"product", "bell"}));
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option("--out", out, "write the report to this file");
    sub->add_flag("--full-scan", full_scan, "search all 256 states for SICs");
    if (name == "reconstruct") sub->add_option("input", input, "SIC JSON file to test");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    sic4::RunConfig config;
    config.tol = sic4::Tolerance(tol);
    config.basis = sic4::basis_from_string(basis);
    config.format = sic4::format_from_string(format);
    config.full_scan = full_scan;
    if (!out.empty()) config.out = out;
    if (!input.empty()) config.input = input;

    const auto report = sic4::run(app.get_subcommands().front()->get_name(), config);
    const std::string text = sic4::render(report);
    if (config.out) {
      std::ofstream file(*config.out);
      if (!file) {
        std::cerr << "sic4: cannot write " << *config.out << '\n';
        return kExitUsage;
      }
      file << text;
    } else {
      std::cout << text;
    }
    return report.all_pass() ? EXIT_SUCCESS : kExitClaimFailure;
  } catch (const std::exception& e) {
    std::cerr << "sic4: " << e.what() << '\n';
    return kExitClaimFailure;
  }
}

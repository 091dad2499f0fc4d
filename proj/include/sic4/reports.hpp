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

#ifndef SIC4_REPORTS_HPP
#define SIC4_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sic4/numerics.hpp"
#include "sic4/two_qubit_structure.hpp"

namespace sic4 {

enum class OutputFormat { json, tsv, text };

std::string to_string(OutputFormat f);
/// Throws std::invalid_argument for an unknown name.
OutputFormat format_from_string(const std::string& s);

struct RunConfig {
  Tolerance tol;
  Basis basis = Basis::product;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out;
  bool full_scan = false;
  std::optional<std::string> input;  // SIC JSON for `reconstruct`
};

struct Claim {
  std::string claim_id;
  std::string paper_anchor;  // topic the claim belongs to
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
};

struct Report {
  std::string subcommand;
  RunConfig config;
  std::vector<Claim> claims;
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> table;  // optional TSV rows, header first
  double runtime_ms = 0.0;

  bool all_pass() const;
  const Claim* find(const std::string& claim_id) const;
};

const std::vector<std::string>& subcommands();

/// Throws std::invalid_argument for an unknown subcommand.
Report run(const std::string& subcommand, const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& c);
nlohmann::json to_json(const Report& r);
/// Renders in r.config.format.
std::string render(const Report& r);

}  // namespace sic4

#endif  // SIC4_REPORTS_HPP

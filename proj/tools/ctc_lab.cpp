// Copyright 2026 The ctc-lab Authors
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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctclab/cli/config.hpp"
#include "ctclab/cli/run.hpp"
#include "ctclab/cli/schema.hpp"
#include "ctclab/version.hpp"

namespace {

using namespace ctclab;
using namespace ctclab::cli;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

void print_findings(const std::vector<Finding>& findings) {
  for (const auto& f : findings) std::cerr << f.field << ": " << f.message << "\n";
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& sets, const std::string& csv_path,
            bool quiet, unsigned jobs) {
  nlohmann::json j = read_json_file(config_path);
  for (const auto& s : sets) apply_override(j, s);
  const ScenarioConfig cfg = parse_config(j);
  const RunResult res = run(cfg, RunOptions{jobs});

  const std::string text = res.report.dump(2) + "\n";
  if (cfg.output_path.empty()) std::cout << text;
  else write_text(cfg.output_path, text);
  if (!csv_path.empty()) write_text(csv_path, spectra_csv(res.spectra));

  if (!quiet) {
    const auto& s = res.report["summary"];
    std::cerr << to_string(cfg.scenario) << ": " << cfg.trials << " trial(s), witness_fraction "
              << s["witness_fraction"].get<double>() << ", max_residual " << s["max_residual"].get<double>()
              << ", failures " << res.failures << "\n";
  }
  return kExitOk;
}

int cmd_validate(const std::string& config_path) {
  nlohmann::json j = read_json_file(config_path);
  const auto findings = validate(j);
  if (findings.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  print_findings(findings);
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deutsch CTC fixed-point and purification lab"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string config_path, csv_path;
  std::vector<std::string> sets;
  bool quiet = false;
  unsigned jobs = 1;

  auto* run_cmd = app.add_subcommand("run", "Run a scenario and write its JSON report");
  run_cmd->add_option("--config", config_path, "Scenario config (JSON)")->required();
  run_cmd->add_option("--set", sets, "Override a config field, key=value (dotted keys for nested fields)");
  run_cmd->add_option("--csv", csv_path, "Also write the spectra table as CSV");
  run_cmd->add_flag("--quiet", quiet, "No summary line on stderr");
  run_cmd->add_option("--jobs", jobs, "Worker threads (results do not depend on this)")
      ->check(CLI::Range(1u, 256u));

  auto* validate_cmd = app.add_subcommand("validate", "Check a config and list findings");
  validate_cmd->add_option("--config", config_path, "Scenario config (JSON)")->required();

  auto* schema_cmd = app.add_subcommand("schema", "Print the JSON Schema for configs and reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(config_path, sets, csv_path, quiet, jobs);
    if (*validate_cmd) return cmd_validate(config_path);
    if (*schema_cmd) {
      std::cout << schema().dump(2) << "\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    print_findings(e.findings);
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitNumerical;
}

// Copyright 2026 The tiltalloc Authors
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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tiltalloc/analysis.hpp"
#include "tiltalloc/config.hpp"
#include "tiltalloc/errors.hpp"
#include "tiltalloc/record_io.hpp"
#include "tiltalloc/simulation.hpp"

namespace fs = std::filesystem;
using namespace tiltalloc;

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitSimulationError = 3;
constexpr int kExitDataError = 4;

fs::path output_root(const std::string& out_flag) {
  if (!out_flag.empty()) return fs::path(out_flag);
  if (const char* env = std::getenv("TILTALLOC_OUT_ROOT")) return fs::path(env);
  return fs::current_path();
}

struct RunOverrides {
  double dt = 0.0;        // 0 = keep config value
  double duration = -1.0; // negative = keep config value
};

struct RunOutcome {
  std::string name;
  RunStatus status = RunStatus::Completed;
  std::string diagnostic;
  double seconds = 0.0;
  fs::path directory;
};

double fit_frequency_for(const Scenario& scenario) {
  if (scenario.trajectory.kind == ReferenceTrajectory::Kind::Circle &&
      scenario.trajectory.angular_rate > 0.0) {
    return scenario.trajectory.angular_rate;
  }
  return 0.8;
}

std::string summary_text(const ParsedScenario& parsed, const RunRecord& record,
                         double seconds) {
  const Scenario& s = parsed.scenario;
  std::ostringstream os;
  os << "scenario: " << s.name << "\n";
  os << "status: " << to_string(record.status) << "\n";
  if (!record.diagnostic.empty()) os << "diagnostic: " << record.diagnostic << "\n";
  os << "rows: " << record.rows.size() << "  dt: " << s.dt
     << " s  substeps: " << s.substeps << "  duration: " << s.duration << " s\n";
  os << "wall time: " << seconds << " s\n";

  if (!record.rows.empty()) {
    double max_ep = 0.0, max_eatt = 0.0, worst_wrench_err = 0.0;
    long saturated_steps = 0, damped_steps = 0;
    for (const StepRecord& row : record.rows) {
      const ReferenceSample ref = s.trajectory.sample(row.t);
      max_ep = std::max(max_ep, (ref.position - row.platform.position).norm());
      max_eatt = std::max(max_eatt, (ref.attitude - row.platform.attitude).norm());
      worst_wrench_err =
          std::max(worst_wrench_err,
                   (row.u_v.vector() - row.u_star.vector()).cwiseAbs().maxCoeff());
      if (row.saturation_mask != 0) ++saturated_steps;
      if (row.damped) ++damped_steps;
    }
    os << "max |position error|: " << max_ep << " m\n";
    os << "max |attitude error|: " << max_eatt << " rad\n";
    os << "max |u_v - u_star| component: " << worst_wrench_err << "\n";
    os << "steps with saturated components: " << saturated_steps << "\n";
    os << "steps on damped pseudo-inverse: " << damped_steps << "\n";
    os << "final objective J(sat(x)): " << record.rows.back().objective << "\n";
  }
  return os.str();
}

RunOutcome execute_scenario(const fs::path& config_path, const fs::path& root,
                            const RunOverrides& overrides) {
  RunOutcome outcome;
  ParsedScenario parsed = parse_scenario_file(config_path);
  if (overrides.dt > 0.0) parsed.scenario.dt = overrides.dt;
  if (overrides.duration >= 0.0) parsed.scenario.duration = overrides.duration;
  parsed.scenario.validate();
  outcome.name = parsed.scenario.name;

  const auto start = std::chrono::steady_clock::now();
  const RunRecord record = run(parsed.scenario);
  outcome.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  outcome.status = record.status;
  outcome.diagnostic = record.diagnostic;

  outcome.directory = root / parsed.scenario.name;
  fs::create_directories(outcome.directory);
  write_record_csv(record, outcome.directory / parsed.output.record);

  const double window_start = 10.0;
  const double frequency = fit_frequency_for(parsed.scenario);
  const double period = 2.0 * M_PI / frequency;
  std::string tables_note;
  if (record.status == RunStatus::Completed && !record.rows.empty() &&
      record.rows.back().t >= window_start + period) {
    const ActuatorTable table = table_report(record, window_start, frequency);
    std::ofstream(outcome.directory / parsed.output.tables)
        << actuator_tables_csv({{parsed.scenario.name, table}});
    tables_note = format_actuator_tables({{parsed.scenario.name, table}});
  } else {
    tables_note = "tables skipped: record does not span the fit window\n";
  }

  std::ofstream(outcome.directory / parsed.output.summary)
      << summary_text(parsed, record, outcome.seconds) << "\n"
      << tables_note;
  return outcome;
}

int report_outcome(const RunOutcome& outcome, bool quiet = false) {
  if (!quiet) {
    std::cout << "run '" << outcome.name << "': " << to_string(outcome.status)
              << " (" << outcome.seconds << " s) -> " << outcome.directory.string()
              << "\n";
  }
  if (outcome.status != RunStatus::Completed) {
    std::cerr << "run '" << outcome.name << "' aborted: " << outcome.diagnostic
              << "\n";
    return kExitSimulationError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop simulator for a dual-tilt hexarotor with dynamic "
               "control allocation"};
  app.require_subcommand(1);

  std::string out_flag;
  app.add_option("--out", out_flag,
                 "Output root directory (default $TILTALLOC_OUT_ROOT or cwd)");

  // --- run ---
  auto* run_cmd = app.add_subcommand("run", "Execute one scenario config");
  std::string run_config;
  RunOverrides overrides;
  run_cmd->add_option("config", run_config, "Scenario config file")->required();
  run_cmd->add_option("--dt", overrides.dt, "Override the control period [s]");
  run_cmd->add_option("--duration", overrides.duration, "Override the duration [s]");

  // --- batch ---
  auto* batch_cmd = app.add_subcommand("batch", "Run every config in a directory");
  std::string batch_dir;
  int jobs = 1;
  batch_cmd->add_option("dir", batch_dir, "Directory of scenario configs")->required();
  batch_cmd->add_option("--jobs", jobs, "Concurrent runs")->check(CLI::PositiveNumber);

  // --- tables ---
  auto* tables_cmd =
      app.add_subcommand("tables", "Steady-state amplitude/offset tables");
  std::vector<std::string> table_records;
  double window_start = 10.0, fit_frequency = 0.8;
  tables_cmd->add_option("records", table_records, "Record CSV files")->required();
  tables_cmd->add_option("--window-start", window_start, "Fit window start [s]");
  tables_cmd->add_option("--frequency", fit_frequency, "Fit frequency [rad/s]");

  // --- compare ---
  auto* compare_cmd = app.add_subcommand("compare", "Column-wise record differences");
  std::string record_a, record_b;
  compare_cmd->add_option("a", record_a, "First record CSV")->required();
  compare_cmd->add_option("b", record_b, "Second record CSV")->required();

  CLI11_PARSE(app, argc, argv);
  const fs::path root = output_root(out_flag);

  try {
    if (*run_cmd) {
      return report_outcome(execute_scenario(run_config, root, overrides));
    }

    if (*batch_cmd) {
      std::vector<fs::path> configs;
      for (const auto& entry : fs::directory_iterator(batch_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ini") {
          configs.push_back(entry.path());
        }
      }
      std::sort(configs.begin(), configs.end());
      if (configs.empty()) {
        std::cerr << "no .ini configs in '" << batch_dir << "'\n";
        return kExitConfigError;
      }

      int failures = 0;
      for (size_t next = 0; next < configs.size();) {
        std::vector<std::future<RunOutcome>> wave;
        for (int j = 0; j < jobs && next < configs.size(); ++j, ++next) {
          wave.push_back(std::async(std::launch::async, execute_scenario,
                                    configs[next], root, RunOverrides{}));
        }
        for (auto& f : wave) {
          if (report_outcome(f.get()) != 0) ++failures;
        }
      }
      return failures == 0 ? 0 : kExitSimulationError;
    }

    if (*tables_cmd) {
      std::vector<std::pair<std::string, ActuatorTable>> tables;
      for (const std::string& path : table_records) {
        const RecordTable table = read_record_table(path);
        const RunRecord record = record_from_table(table, fs::path(path).stem());
        tables.emplace_back(fs::path(path).stem().string(),
                            table_report(record, window_start, fit_frequency));
      }
      std::cout << format_actuator_tables(tables);
      if (!out_flag.empty()) {
        fs::create_directories(root);
        std::ofstream(root / "tables.csv") << actuator_tables_csv(tables);
        std::cout << "wrote " << (root / "tables.csv").string() << "\n";
      }
      return 0;
    }

    if (*compare_cmd) {
      const ComparisonReport report =
          compare_runs(read_record_table(record_a), read_record_table(record_b));
      std::cout << report.format();
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const GridMismatch& e) {
    std::cerr << "grid mismatch: " << e.what() << "\n";
    return kExitDataError;
  } catch (const FitError& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "netmean/sbm.hpp"

namespace netmean {

enum class ExperimentKind { theorem1, theorem2, zeta_scaling, spectrum, round_trip };

/// Canonical names: theorem1, theorem2, zeta-scaling, spectrum, round-trip.
std::string experiment_kind_name(ExperimentKind kind);
ExperimentKind experiment_kind_from_name(const std::string& name);

/// Configuration of one experiment run. Every field has a per-experiment
/// default (see default_config and the README); a JSON config file overrides
/// fields by the exact names used here.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::theorem1;
  SbmParams params{6, 0.9, 0.1};  // n is ignored by theorem2 in favor of n_grid
  int sample_size = 201;          // N
  int trials = 100;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "reports";
  std::map<std::string, double> tolerances;
  std::vector<int> n_grid;       // theorem2: vertex counts, one batch of trials each
  std::vector<int> sample_grid;  // zeta-scaling: sample sizes probed per trial
  double alpha = 1.0;            // regularization passed to the barycenter

  void validate() const;
};

/// Per-trial rows (already formatted, locale-independent), the column names,
/// a JSON summary with per-check pass/fail, and the config echo. Rows are
/// deterministic given the config; wall-clock columns are the only exception
/// and are excluded from the determinism contract.
struct ExperimentReport {
  ExperimentConfig config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json summary;
  bool passed = false;
};

ExperimentConfig default_config(ExperimentKind kind);

/// Parses a config document, starting from the defaults for the named
/// experiment and overriding any field present.
ExperimentConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ExperimentConfig& config);

ExperimentReport run_experiment(const ExperimentConfig& config);

std::string report_csv(const ExperimentReport& report);
nlohmann::json report_json(const ExperimentReport& report);

enum class ReportFormat { csv, json };

/// Writes <name>.csv plus <name>_summary.json (csv format) or a single
/// <name>.json (json format) into the directory, creating it if needed.
/// Returns the paths written.
std::vector<std::filesystem::path> emit_report(const ExperimentReport& report,
                                               const std::filesystem::path& dir,
                                               ReportFormat format);

}  // namespace netmean

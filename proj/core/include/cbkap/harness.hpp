#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cbkap/attack.hpp"
#include "cbkap/protocol.hpp"

namespace cbkap {

/// Per-trial seed derived from the experiment seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::size_t k, std::size_t n, double z = 1.96);

std::string instance_to_json(const TTPInstance& inst, bool keep_witness);
/// Inverse of instance_to_json.  Without a secret block the witness fields
/// are left empty.  Throws std::runtime_error on malformed input.
TTPInstance instance_from_json(const std::string& text);
bool has_witness(const TTPInstance& inst) noexcept;

struct ExperimentConfig {
  /// 1 or 2 for the standard sets, 0 for custom `params`.
  int parameter_set = 1;
  TTPParams params = cbkap::parameter_set(1);
  int trials = 20;
  std::vector<Strategy> strategies;
  std::uint64_t seed = 1;
  int jobs = 1;
  AttackCaps caps;

  void validate() const;
};

struct TrialRow {
  std::string instance_id;
  AttackOutcome outcome;
  /// Fresh re-verification of a reported success.
  bool audit_passed = false;
};

struct StrategySummary {
  Strategy strategy;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t exact_z = 0;
  std::size_t delta_errors = 0;
  std::size_t unsound = 0;
  double mean_wall_ms = 0;
  double median_wall_ms = 0;

  double success_rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0; }
  double exact_z_rate() const { return trials ? static_cast<double>(exact_z) / static_cast<double>(trials) : 0; }
};

struct ExperimentReport {
  ExperimentConfig config;
  /// Ordered by trial index, then by strategy order in the config.
  std::vector<TrialRow> rows;
  std::vector<StrategySummary> summaries;
};

std::vector<StrategySummary> summarize(const std::vector<TrialRow>& rows, const std::vector<Strategy>& strategies);

/// Generates `trials` instances and attacks each with every strategy.
/// `on_row` is called under a lock as rows complete (any order).
ExperimentReport run_experiment(const ExperimentConfig& config,
                                const std::function<void(const TrialRow&)>& on_row = {});

std::string csv_header();
std::string csv_row(const TrialRow& row);
void write_csv(std::ostream& out, const std::vector<TrialRow>& rows);
std::string report_to_json(const ExperimentReport& report);

}  // namespace cbkap

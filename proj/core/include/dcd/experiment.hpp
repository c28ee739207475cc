#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dcd/detector.hpp"
#include "dcd/graph.hpp"
#include "dcd/lpa.hpp"
#include "dcd/metrics.hpp"

namespace dcd {

struct ExperimentConfig {
  std::uint64_t seed = 42;
  /// Edge-list files; empty means the three bundled toy networks.
  std::vector<std::string> network_paths;
  std::size_t perturbation_count = 99;
  std::size_t simulation_count = 5;
  LpaConfig lpa;  // .seed is ignored; per-run seeds are derived
  DetectorConfig detector;
  std::string output_dir = "experiment-out";
};

enum class Algorithm { lpa, lpa_optimized, detector };

const char* algorithm_name(Algorithm a);

struct RunRecord {
  std::string network_id;
  Algorithm algorithm;
  std::size_t simulation;  // 1-based
  std::uint64_t seed;      // LPA seed of the run; 0 for the seedless detector
  MetricsRecord metrics;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  /// Rendered output tables; written verbatim by write_experiment_outputs.
  std::string runs_csv;     // network,algorithm,simulation,seed,n_communities,adc,modularity
  std::string summary_csv;  // per (network, algorithm) means over simulations
  std::string means_csv;    // per algorithm means over every run
};

/// Parses the flat key=value experiment config format:
///   seed=42
///   network=data/toynet1.edges     (repeatable; omit for bundled networks)
///   perturbations=99
///   simulations=5
///   lpa_max_iterations=100
///   detector_coefficient=global    (global | local)
///   output_dir=experiment-out
/// Blank lines and '#' comments are skipped; unknown keys are errors.
ExperimentConfig parse_experiment_config(std::string_view text);

/// Runs the full comparison protocol: loads the base networks, derives
/// `perturbation_count` perturbed copies, and for every network and
/// simulation index runs LPA (derived seed), the density optimizer on the
/// LPA partition, and the detector, recording metrics for each. Modularity
/// is reported in as-written mode. Identical configs produce byte-identical
/// CSV strings.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes runs.csv, summary.csv and means.csv into output_dir (created if
/// missing).
void write_experiment_outputs(const ExperimentResult& result,
                              const std::filesystem::path& output_dir);

}  // namespace dcd

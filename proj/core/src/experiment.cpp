#include "dcd/experiment.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "dcd/bundled_networks.hpp"
#include "dcd/errors.hpp"
#include "dcd/generators.hpp"
#include "dcd/optimizer.hpp"
#include "dcd/rng.hpp"

namespace dcd {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::lpa: return "lpa";
    case Algorithm::lpa_optimized: return "lpa+optimized";
    case Algorithm::detector: return "detector";
  }
  return "?";
}

namespace {

std::uint64_t parse_u64(std::string_view token, std::size_t line_no,
                        std::string_view key) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, fmt::format("{}: expected an integer, got '{}'", key, token));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

struct NamedNetwork {
  std::string id;
  DirectedGraph graph;
};

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::vector<NamedNetwork> load_networks(const ExperimentConfig& cfg) {
  std::vector<NamedNetwork> nets;
  if (cfg.network_paths.empty()) {
    for (const BundledNetwork& bn : bundled_toy_networks()) {
      nets.push_back({std::string(bn.id), parse_edge_list(bn.edge_list)});
    }
    return nets;
  }
  for (const std::string& path : cfg.network_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error(fmt::format("cannot open network file '{}'", path));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      nets.push_back({stem_of(path), parse_edge_list(buffer.str())});
    } catch (const ParseError& e) {
      throw std::runtime_error(fmt::format("{}: {}", path, e.what()));
    }
  }
  return nets;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig cfg;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected 'key=value'");
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));

    if (key == "seed") {
      cfg.seed = parse_u64(value, line_no, key);
    } else if (key == "network") {
      if (value.empty()) throw ParseError(line_no, "network: empty path");
      cfg.network_paths.emplace_back(value);
    } else if (key == "perturbations") {
      cfg.perturbation_count = parse_u64(value, line_no, key);
    } else if (key == "simulations") {
      cfg.simulation_count = parse_u64(value, line_no, key);
      if (cfg.simulation_count < 1) {
        throw ParseError(line_no, "simulations must be >= 1");
      }
    } else if (key == "lpa_max_iterations") {
      const std::uint64_t v = parse_u64(value, line_no, key);
      if (v < 1) throw ParseError(line_no, "lpa_max_iterations must be >= 1");
      cfg.lpa.max_iterations = static_cast<int>(v);
    } else if (key == "detector_coefficient") {
      if (value == "global") {
        cfg.detector.coefficient_strategy = CoefficientStrategy::global_transitivity;
      } else if (value == "local") {
        cfg.detector.coefficient_strategy = CoefficientStrategy::average_local;
      } else {
        throw ParseError(line_no,
                         fmt::format("detector_coefficient must be global or local, got '{}'",
                                     value));
      }
    } else if (key == "output_dir") {
      if (value.empty()) throw ParseError(line_no, "output_dir: empty path");
      cfg.output_dir = std::string(value);
    } else {
      throw ParseError(line_no, fmt::format("unknown key '{}'", key));
    }
  }
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.simulation_count < 1) {
    throw std::invalid_argument("run_experiment: simulation_count must be >= 1");
  }

  std::vector<NamedNetwork> networks = load_networks(cfg);
  if (networks.empty()) {
    throw std::invalid_argument("run_experiment: no networks");
  }

  {
    std::vector<DirectedGraph> bases;
    bases.reserve(networks.size());
    for (const auto& net : networks) bases.push_back(net.graph);
    std::vector<DirectedGraph> perturbed =
        generate_perturbed_networks(bases, cfg.perturbation_count, cfg.seed);
    for (std::size_t i = 0; i < perturbed.size(); ++i) {
      networks.push_back(
          {fmt::format("perturbed_{:03}", i + 1), std::move(perturbed[i])});
    }
  }

  ExperimentResult result;
  result.records.reserve(networks.size() * cfg.simulation_count * 3);

  for (const NamedNetwork& net : networks) {
    for (std::size_t sim = 1; sim <= cfg.simulation_count; ++sim) {
      const std::uint64_t run_seed = derive_run_seed(cfg.seed, net.id, sim);
      try {
        LpaConfig lpa_cfg = cfg.lpa;
        lpa_cfg.seed = run_seed;
        const LpaResult lpa_run = label_propagation(net.graph, lpa_cfg);
        result.records.push_back(
            {net.id, Algorithm::lpa, sim, run_seed,
             compute_metrics(net.graph, lpa_run.partition)});

        const OptimizationReport opt = optimize_density(net.graph, lpa_run.partition);
        result.records.push_back(
            {net.id, Algorithm::lpa_optimized, sim, run_seed,
             compute_metrics(net.graph, opt.output_partition)});

        const Partition detected = detect_communities(net.graph, cfg.detector);
        result.records.push_back(
            {net.id, Algorithm::detector, sim, 0,
             compute_metrics(net.graph, detected)});
      } catch (const std::exception& e) {
        throw std::runtime_error(
            fmt::format("network '{}', simulation {}: {}", net.id, sim, e.what()));
      }
    }
  }

  // runs.csv rows follow the deterministic (network, simulation, algorithm)
  // generation order.
  result.runs_csv = "network,algorithm,simulation,seed,n_communities,adc,modularity\n";
  for (const RunRecord& r : result.records) {
    result.runs_csv += fmt::format("{},{},{},{},{},{:.6f},{:.6f}\n", r.network_id,
                                   algorithm_name(r.algorithm), r.simulation, r.seed,
                                   r.metrics.n_communities, r.metrics.adc,
                                   r.metrics.modularity);
  }

  // Per-(network, algorithm) means over the simulations.
  result.summary_csv =
      "network,algorithm,simulations,mean_n_communities,mean_adc,mean_modularity\n";
  for (const NamedNetwork& net : networks) {
    for (Algorithm a : {Algorithm::lpa, Algorithm::lpa_optimized, Algorithm::detector}) {
      double n_sum = 0.0, adc_sum = 0.0, q_sum = 0.0;
      std::size_t count = 0;
      for (const RunRecord& r : result.records) {
        if (r.network_id == net.id && r.algorithm == a) {
          n_sum += static_cast<double>(r.metrics.n_communities);
          adc_sum += r.metrics.adc;
          q_sum += r.metrics.modularity;
          ++count;
        }
      }
      result.summary_csv += fmt::format(
          "{},{},{},{:.6f},{:.6f},{:.6f}\n", net.id, algorithm_name(a), count,
          n_sum / count, adc_sum / count, q_sum / count);
    }
  }

  // Per-algorithm means over every (network, simulation) run — the
  // "horizontal lines" of the comparison plots.
  result.means_csv = "algorithm,runs,mean_adc,mean_modularity\n";
  for (Algorithm a : {Algorithm::lpa, Algorithm::lpa_optimized, Algorithm::detector}) {
    double adc_sum = 0.0, q_sum = 0.0;
    std::size_t count = 0;
    for (const RunRecord& r : result.records) {
      if (r.algorithm == a) {
        adc_sum += r.metrics.adc;
        q_sum += r.metrics.modularity;
        ++count;
      }
    }
    result.means_csv += fmt::format("{},{},{:.6f},{:.6f}\n", algorithm_name(a), count,
                                    adc_sum / count, q_sum / count);
  }
  return result;
}

void write_experiment_outputs(const ExperimentResult& result,
                              const std::filesystem::path& output_dir) {
  std::filesystem::create_directories(output_dir);
  auto write = [&](const char* name, const std::string& content) {
    const auto path = output_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    }
    out << content;
  };
  write("runs.csv", result.runs_csv);
  write("summary.csv", result.summary_csv);
  write("means.csv", result.means_csv);
}

}  // namespace dcd

#include "dcd/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "dcd/rng.hpp"

namespace dcd {

std::vector<DirectedGraph> generate_perturbed_networks(
    std::span<const DirectedGraph> bases, std::size_t count, std::uint64_t seed) {
  if (bases.empty()) {
    throw std::invalid_argument("generate_perturbed_networks: no base networks");
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].edge_count() == 0) {
      throw std::invalid_argument(fmt::format(
          "generate_perturbed_networks: base network {} has no edges", i));
    }
  }

  SplitMix64 rng(seed);
  std::vector<DirectedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const DirectedGraph& base = bases[rng.uniform_below(bases.size())];
    const std::size_t drop = rng.uniform_below(base.edge_count());

    std::vector<std::string> labels(base.labels().begin(), base.labels().end());
    std::vector<Edge> edges;
    edges.reserve(base.edge_count() - 1);
    for (std::size_t e = 0; e < base.edge_count(); ++e) {
      if (e != drop) edges.push_back(base.edges()[e]);
    }
    out.emplace_back(std::move(labels), std::move(edges));
  }
  return out;
}

DirectedGraph generate_synthetic_large(std::size_t nodes, double mean_out_degree,
                                       std::uint64_t seed) {
  if (nodes < 2) {
    throw std::invalid_argument("generate_synthetic_large: need at least 2 nodes");
  }
  const double max_degree = static_cast<double>(nodes - 1);
  if (!(mean_out_degree > 0.0) || mean_out_degree > max_degree) {
    throw std::invalid_argument(fmt::format(
        "generate_synthetic_large: mean_out_degree must be in (0, {}], got {}",
        max_degree, mean_out_degree));
  }
  const double p = mean_out_degree / max_degree;

  std::vector<std::string> labels(nodes);
  for (std::size_t v = 0; v < nodes; ++v) labels[v] = std::to_string(v);

  // Bernoulli(p) over all n*(n-1) ordered pairs, visited via geometric
  // jumps so the cost is proportional to the edge count, not the pair count.
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(mean_out_degree * nodes * 1.1) + 16);
  const std::uint64_t total_pairs =
      static_cast<std::uint64_t>(nodes) * (nodes - 1);

  auto emit = [&](std::uint64_t pair_index) {
    const std::uint64_t row = pair_index / (nodes - 1);
    const std::uint64_t rem = pair_index % (nodes - 1);
    const std::uint64_t col = rem < row ? rem : rem + 1;  // skip the diagonal
    edges.push_back(Edge{static_cast<NodeId>(row), static_cast<NodeId>(col), 1.0});
  };

  if (p >= 1.0) {
    for (std::uint64_t t = 0; t < total_pairs; ++t) emit(t);
  } else {
    const double log_keep = std::log1p(-p);
    std::uint64_t t = 0;
    while (t < total_pairs) {
      double unit = rng.uniform_unit();
      if (unit <= 0.0) unit = 0x1.0p-53;  // log(0) guard
      const double skip = std::floor(std::log(unit) / log_keep);
      if (skip >= static_cast<double>(total_pairs)) break;
      t += static_cast<std::uint64_t>(skip);
      if (t >= total_pairs) break;
      emit(t);
      ++t;
    }
  }
  return DirectedGraph(std::move(labels), std::move(edges));
}

}  // namespace dcd

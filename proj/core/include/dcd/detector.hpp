#pragma once

#include "dcd/graph.hpp"
#include "dcd/partition.hpp"

namespace dcd {

/// Score used when a community and a candidate component are aggregated:
/// global transitivity of the union subgraph (default) or the mean of the
/// nodes' local clustering coefficients.
enum class CoefficientStrategy { global_transitivity, average_local };

struct DetectorConfig {
  CoefficientStrategy coefficient_strategy = CoefficientStrategy::global_transitivity;
};

/// SCC-seeded community detection. Every strongly connected component starts
/// as its own community; the components are then visited once in
/// decomposition order, and each still-unabsorbed component absorbs the
/// unabsorbed neighboring component whose aggregation maximizes the
/// clustering coefficient of the combined subgraph (ties broken toward the
/// smallest component ordinal). No randomness anywhere: repeated runs on the
/// same graph return identical partitions.
Partition detect_communities(const DirectedGraph& g, const DetectorConfig& cfg = {});

}  // namespace dcd

#pragma once

#include <cstddef>
#include <span>

#include "dcd/graph.hpp"
#include "dcd/partition.hpp"

namespace dcd {

/// How modularity treats edge direction.
///   as_written   — Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j)
///                  evaluated on the directed adjacency: k_i is the weighted
///                  out-degree (row sum) and m = (1/2) sum_ij A_ij. Default
///                  for all harness reports.
///   symmetrized  — the same formula after symmetrizing the adjacency
///                  (standard Newman modularity on the undirected view).
enum class ModularityMode { as_written, symmetrized };

struct MetricsRecord {
  std::size_t n_communities;
  double adc;
  double modularity;
};

/// Density of a node set: internal directed edge count / (n*(n-1)).
/// Single-node sets have density 0 by convention. Throws on an empty set or
/// out-of-range indices.
double community_density(const DirectedGraph& g, std::span<const NodeId> community);

/// Average Density per Community: unweighted mean of community_density over
/// the partition's communities. Throws when p does not cover g's nodes.
double adc(const DirectedGraph& g, const Partition& p);

/// Partition modularity; see ModularityMode. Throws on an edgeless graph
/// (m = 0) or a partition/graph mismatch. The all-in-one partition scores
/// exactly 0 for every graph.
double modularity(const DirectedGraph& g, const Partition& p,
                  ModularityMode mode = ModularityMode::as_written);

/// Transitivity of the undirected view: 3 * triangles / connected triples;
/// 0 when the graph has no connected triple.
double global_clustering_coefficient(const DirectedGraph& g);

MetricsRecord compute_metrics(const DirectedGraph& g, const Partition& p,
                              ModularityMode mode = ModularityMode::as_written);

}  // namespace dcd

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcd/graph.hpp"
#include "dcd/partition.hpp"

namespace dcd {

/// One executed split: input community id, how many strongly connected
/// components it disbanded into, and the two densities that were compared.
/// mean_component_density > community_density holds for every listed split.
struct CommunitySplit {
  std::uint32_t community;
  std::size_t component_count;
  double community_density;
  double mean_component_density;
};

struct OptimizationReport {
  Partition input_partition;
  Partition output_partition;
  std::vector<CommunitySplit> splits;
};

/// Density optimization of a partition: each community whose induced subgraph
/// has more than one strongly connected component is disbanded into one
/// community per component, but only when the unweighted mean of the
/// component densities strictly exceeds the community's own density
/// (singleton components count as density 0). Communities are processed
/// independently; the pass is idempotent because post-split communities are
/// single components. Throws on a partition/graph mismatch.
OptimizationReport optimize_density(const DirectedGraph& g, const Partition& p);

}  // namespace dcd

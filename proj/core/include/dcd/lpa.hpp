#pragma once

#include <cstdint>

#include "dcd/graph.hpp"
#include "dcd/partition.hpp"

namespace dcd {

struct LpaConfig {
  std::uint64_t seed = 0;
  int max_iterations = 100;
};

struct LpaResult {
  Partition partition;
  bool converged = false;
  int iterations = 0;
};

/// Asynchronous label propagation. Every node starts with a unique label;
/// each iteration visits the nodes in a freshly shuffled order and each node
/// adopts a maximal-frequency label among its undirected-view neighbors
/// (frequencies weight-summed), ties broken uniformly at random. Stops when
/// an iteration changes no label, or after cfg.max_iterations.
///
/// The tie randomness is deliberate — it is what makes the benchmark unstable
/// across seeds. Identical (graph, seed, max_iterations) runs produce
/// identical partitions.
LpaResult label_propagation(const DirectedGraph& g, const LpaConfig& cfg);

}  // namespace dcd

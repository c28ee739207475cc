#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcd/graph.hpp"

namespace dcd {

/// Strongly-connected-component decomposition. Components partition the node
/// set; two nodes share a component iff each reaches the other along directed
/// edges. The component list is ordered by smallest contained node index and
/// each component's node list is ascending, so the decomposition is a
/// deterministic function of the graph alone.
struct SccDecomposition {
  std::vector<std::vector<NodeId>> components;
  std::vector<std::uint32_t> component_of;

  std::size_t component_count() const { return components.size(); }
};

/// Tarjan's algorithm with an explicit stack; handles graphs of 1e5+ nodes
/// without recursion-depth failures.
SccDecomposition strongly_connected_components(const DirectedGraph& g);

}  // namespace dcd

#include "dcd/optimizer.hpp"

#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "dcd/scc.hpp"

namespace dcd {

namespace {

double density_of(std::size_t nodes, std::size_t internal_edges) {
  if (nodes < 2) return 0.0;
  return static_cast<double>(internal_edges) /
         (static_cast<double>(nodes) * (nodes - 1));
}

}  // namespace

OptimizationReport optimize_density(const DirectedGraph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) {
    throw std::invalid_argument(
        fmt::format("optimize_density: partition covers {} nodes but the graph has {}",
                    p.node_count(), g.node_count()));
  }

  OptimizationReport report;
  report.input_partition = p;

  std::vector<std::uint32_t> next_assignment(g.node_count(), 0);
  std::uint32_t next_id = 0;

  const auto groups = p.communities();
  for (std::uint32_t cid = 0; cid < groups.size(); ++cid) {
    const std::vector<NodeId>& nodes = groups[cid];
    Subgraph sub = induced_subgraph(g, nodes);
    SccDecomposition scc = strongly_connected_components(sub.graph);
    const std::size_t n_components = scc.component_count();

    bool split = false;
    if (n_components > 1) {
      // Count internal edges per component of the community subgraph.
      std::vector<std::size_t> component_edges(n_components, 0);
      for (const Edge& e : sub.graph.edges()) {
        if (scc.component_of[e.source] == scc.component_of[e.target]) {
          ++component_edges[scc.component_of[e.source]];
        }
      }
      double mean_component_density = 0.0;
      for (std::size_t c = 0; c < n_components; ++c) {
        mean_component_density +=
            density_of(scc.components[c].size(), component_edges[c]);
      }
      mean_component_density /= static_cast<double>(n_components);
      const double community_density = density_of(nodes.size(), sub.graph.edge_count());

      if (mean_component_density > community_density) {
        split = true;
        for (const auto& component : scc.components) {
          for (NodeId sub_node : component) {
            next_assignment[sub.parent_index[sub_node]] = next_id;
          }
          ++next_id;
        }
        report.splits.push_back(CommunitySplit{cid, n_components, community_density,
                                               mean_component_density});
      }
    }
    if (!split) {
      for (NodeId v : nodes) next_assignment[v] = next_id;
      ++next_id;
    }
  }

  report.output_partition = Partition::from_assignment(next_assignment);
  return report;
}

}  // namespace dcd

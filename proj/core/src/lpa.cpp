#include "dcd/lpa.hpp"

#include <stdexcept>
#include <vector>

#include "dcd/rng.hpp"

namespace dcd {

LpaResult label_propagation(const DirectedGraph& g, const LpaConfig& cfg) {
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("label_propagation: max_iterations must be >= 1");
  }
  const std::size_t n = g.node_count();
  const UndirectedGraph u = undirected_view(g);
  SplitMix64 rng(cfg.seed);

  std::vector<std::uint32_t> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = static_cast<std::uint32_t>(v);

  std::vector<NodeId> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<NodeId>(v);

  // Label frequencies via epoch-stamped scratch arrays: O(deg) per node
  // visit, no per-visit allocation.
  std::vector<double> weight_of_label(n, 0.0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> best_labels;
  std::uint32_t epoch = 0;

  LpaResult result;
  int iteration = 0;
  for (; iteration < cfg.max_iterations; ++iteration) {
    shuffle(order, rng);
    bool changed = false;
    for (NodeId v : order) {
      auto neighbors = u.neighbors(v);
      if (neighbors.empty()) continue;  // isolated nodes keep their label

      ++epoch;
      touched.clear();
      double best_weight = 0.0;
      for (const auto& [w, edge_weight] : neighbors) {
        const std::uint32_t l = label[w];
        if (stamp[l] != epoch) {
          stamp[l] = epoch;
          weight_of_label[l] = 0.0;
          touched.push_back(l);
        }
        weight_of_label[l] += edge_weight;
        if (weight_of_label[l] > best_weight) best_weight = weight_of_label[l];
      }
      best_labels.clear();
      for (std::uint32_t l : touched) {
        if (weight_of_label[l] == best_weight) best_labels.push_back(l);
      }
      // The uniform tie draw is the benchmark's instability source; a node
      // may leave its own maximal label for another maximal one.
      const std::uint32_t chosen =
          best_labels.size() == 1
              ? best_labels.front()
              : best_labels[rng.uniform_below(best_labels.size())];
      if (chosen != label[v]) {
        label[v] = chosen;
        changed = true;
      }
    }
    if (!changed) {
      result.converged = true;
      ++iteration;
      break;
    }
  }

  result.iterations = iteration;
  result.partition = Partition::from_assignment(label);
  return result;
}

}  // namespace dcd

#include "dcd/scc.hpp"

#include <algorithm>

namespace dcd {

namespace {
constexpr std::uint32_t kUnvisited = ~std::uint32_t{0};
}

SccDecomposition strongly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  stack.reserve(n);

  std::vector<std::vector<NodeId>> components;
  std::vector<std::uint32_t> component_of(n, 0);
  std::uint32_t next_index = 0;

  // Explicit DFS frame: node + position within its out-edge list. Keeps the
  // pass safe on graphs far deeper than the call stack allows.
  struct Frame {
    NodeId node;
    std::size_t edge_pos;
  };
  std::vector<Frame> frames;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      const NodeId v = frame.node;
      auto out = g.out_edges(v);
      if (frame.edge_pos < out.size()) {
        const NodeId w = out[frame.edge_pos++].first;
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          std::vector<NodeId> component;
          NodeId w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
          } while (w != v);
          components.push_back(std::move(component));
        }
        frames.pop_back();
        if (!frames.empty()) {
          NodeId parent = frames.back().node;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }

  // Deterministic contract: components ordered by smallest member index,
  // members ascending, regardless of traversal order.
  for (auto& component : components) {
    std::sort(component.begin(), component.end());
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::uint32_t c = 0; c < components.size(); ++c) {
    for (NodeId v : components[c]) component_of[v] = c;
  }
  return SccDecomposition{std::move(components), std::move(component_of)};
}

}  // namespace dcd

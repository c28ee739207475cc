#include "dcd/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace dcd {

namespace {

void check_cover(const DirectedGraph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) {
    throw std::invalid_argument(
        fmt::format("partition covers {} nodes but the graph has {}",
                    p.node_count(), g.node_count()));
  }
}

}  // namespace

double community_density(const DirectedGraph& g, std::span<const NodeId> community) {
  if (community.empty()) {
    throw std::invalid_argument("community_density: empty node set");
  }
  std::vector<bool> member(g.node_count(), false);
  for (NodeId v : community) {
    if (v >= g.node_count()) {
      throw std::invalid_argument(
          fmt::format("community_density: node index {} out of range", v));
    }
    if (member[v]) {
      throw std::invalid_argument(
          fmt::format("community_density: duplicate node index {}", v));
    }
    member[v] = true;
  }
  const std::size_t n = community.size();
  if (n < 2) return 0.0;  // a lone node has no internal cohesion

  std::size_t internal = 0;
  for (NodeId v : community) {
    for (const auto& [target, weight] : g.out_edges(v)) {
      if (member[target]) ++internal;
    }
  }
  return static_cast<double>(internal) / (static_cast<double>(n) * (n - 1));
}

double adc(const DirectedGraph& g, const Partition& p) {
  check_cover(g, p);
  const std::size_t k = p.community_count();
  if (k == 0) {
    throw std::invalid_argument("adc: empty graph has no communities");
  }
  // One edge pass; density per community from internal counts and sizes.
  std::vector<std::size_t> size(k, 0);
  std::vector<std::size_t> internal(k, 0);
  for (std::uint32_t c : p.assignment()) ++size[c];
  for (const Edge& e : g.edges()) {
    if (p.community_of(e.source) == p.community_of(e.target)) {
      ++internal[p.community_of(e.source)];
    }
  }
  double sum = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    if (size[c] >= 2) {
      sum += static_cast<double>(internal[c]) /
             (static_cast<double>(size[c]) * (size[c] - 1));
    }
  }
  return sum / static_cast<double>(k);
}

double modularity(const DirectedGraph& g, const Partition& p, ModularityMode mode) {
  check_cover(g, p);
  if (g.edge_count() == 0) {
    throw std::invalid_argument("modularity: graph has no edges (m = 0)");
  }

  // Q = W_in/W - sum_C (K_C/W)^2 with W = sum_ij A_ij = 2m. The three
  // accumulators advance in lockstep over the same edge sequence so the
  // all-in-one partition cancels to exactly 0 in floating point too.
  const std::size_t k = p.community_count();
  std::vector<double> community_strength(k, 0.0);
  double total = 0.0;
  double internal = 0.0;

  if (mode == ModularityMode::as_written) {
    for (const Edge& e : g.edges()) {
      total += e.weight;
      community_strength[p.community_of(e.source)] += e.weight;  // k_i is the row sum
      if (p.community_of(e.source) == p.community_of(e.target)) {
        internal += e.weight;
      }
    }
  } else {
    for (const UndirectedEdge& e : undirected_view(g).edges()) {
      total += e.weight;
      total += e.weight;
      community_strength[p.community_of(e.u)] += e.weight;
      community_strength[p.community_of(e.v)] += e.weight;
      if (p.community_of(e.u) == p.community_of(e.v)) {
        internal += e.weight;
        internal += e.weight;
      }
    }
  }

  double q = internal / total;
  for (double strength : community_strength) {
    const double fraction = strength / total;
    q -= fraction * fraction;
  }
  return q;
}

double global_clustering_coefficient(const DirectedGraph& g) {
  const UndirectedGraph u = undirected_view(g);
  // Triples from degrees; triangles by counting, per edge, the common
  // neighbors of its endpoints (each triangle is seen by its three edges).
  double triples = 0.0;
  for (NodeId v = 0; v < u.node_count(); ++v) {
    const double d = static_cast<double>(u.degree(v));
    triples += d * (d - 1) / 2.0;
  }
  if (triples == 0.0) return 0.0;

  std::size_t triangle_thirds = 0;
  for (const UndirectedEdge& e : u.edges()) {
    auto a = u.neighbors(e.u);
    auto b = u.neighbors(e.v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first) {
        ++i;
      } else if (a[i].first > b[j].first) {
        ++j;
      } else {
        ++triangle_thirds;
        ++i;
        ++j;
      }
    }
  }
  const double triangles = static_cast<double>(triangle_thirds) / 3.0;
  return 3.0 * triangles / triples;
}

MetricsRecord compute_metrics(const DirectedGraph& g, const Partition& p,
                              ModularityMode mode) {
  return MetricsRecord{p.community_count(), adc(g, p), modularity(g, p, mode)};
}

}  // namespace dcd

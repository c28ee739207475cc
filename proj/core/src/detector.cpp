#include "dcd/detector.hpp"

#include <algorithm>
#include <vector>

#include "dcd/scc.hpp"

namespace dcd {

namespace {

double binomial2(double d) { return d * (d - 1) / 2.0; }

/// Clustering-coefficient evaluation for the union of two strongly connected
/// components. Per-component triangle/triple counts are cached; only the
/// cross-edge contribution is computed per candidate, so one component being
/// huge (the usual giant SCC) costs its full count once, not once per
/// candidate pair.
class PairCoefficientCache {
 public:
  PairCoefficientCache(const UndirectedGraph& u, const SccDecomposition& scc)
      : u_(u),
        scc_(scc),
        degree_in_comp_(u.node_count(), 0),
        comp_triangles_(scc.component_count(), -1.0),
        comp_triples_(scc.component_count(), 0.0),
        cross_degree_(u.node_count(), 0),
        cross_stamp_(u.node_count(), 0) {
    for (NodeId v = 0; v < u_.node_count(); ++v) {
      const auto comp = scc_.component_of[v];
      for (const auto& [w, weight] : u_.neighbors(v)) {
        if (scc_.component_of[w] == comp) ++degree_in_comp_[v];
      }
    }
    for (std::uint32_t c = 0; c < scc_.component_count(); ++c) {
      for (NodeId v : scc_.components[c]) {
        comp_triples_[c] += binomial2(static_cast<double>(degree_in_comp_[v]));
      }
    }
  }

  /// Transitivity of the subgraph induced by components a and b together.
  double union_transitivity(std::uint32_t a, std::uint32_t b) {
    // Iterate cross edges from the smaller component.
    const std::uint32_t small =
        scc_.components[a].size() <= scc_.components[b].size() ? a : b;
    const std::uint32_t large = small == a ? b : a;

    ++epoch_;
    touched_.clear();
    std::size_t common_sum = 0;  // sum over cross edges of shared union neighbors
    for (NodeId v : scc_.components[small]) {
      for (const auto& [w, weight] : u_.neighbors(v)) {
        if (scc_.component_of[w] != large) continue;
        mark_cross(v);
        mark_cross(w);
        common_sum += common_union_neighbors(v, w, a, b);
      }
    }

    double triples = comp_triples(a) + comp_triples(b);
    for (NodeId v : touched_) {
      const double d = static_cast<double>(degree_in_comp_[v]);
      const double x = static_cast<double>(cross_degree_[v]);
      triples += binomial2(d + x) - binomial2(d);
    }
    if (triples == 0.0) return 0.0;

    // Every triangle spanning both components has exactly two cross edges.
    const double triangles =
        comp_triangles(a) + comp_triangles(b) + static_cast<double>(common_sum) / 2.0;
    return 3.0 * triangles / triples;
  }

 private:
  void mark_cross(NodeId v) {
    if (cross_stamp_[v] != epoch_) {
      cross_stamp_[v] = epoch_;
      cross_degree_[v] = 0;
      touched_.push_back(v);
    }
    ++cross_degree_[v];
  }

  std::size_t common_union_neighbors(NodeId v, NodeId w, std::uint32_t a,
                                     std::uint32_t b) const {
    auto nv = u_.neighbors(v);
    auto nw = u_.neighbors(w);
    std::size_t i = 0, j = 0, count = 0;
    while (i < nv.size() && j < nw.size()) {
      if (nv[i].first < nw[j].first) {
        ++i;
      } else if (nv[i].first > nw[j].first) {
        ++j;
      } else {
        const std::uint32_t c = scc_.component_of[nv[i].first];
        if (c == a || c == b) ++count;
        ++i;
        ++j;
      }
    }
    return count;
  }

  double comp_triples(std::uint32_t c) const { return comp_triples_[c]; }

  double comp_triangles(std::uint32_t c) {
    if (comp_triangles_[c] >= 0.0) return comp_triangles_[c];
    // Each internal triangle is seen once per internal edge, i.e. 3 times.
    std::size_t thirds = 0;
    for (NodeId v : scc_.components[c]) {
      for (const auto& [w, weight] : u_.neighbors(v)) {
        if (w <= v || scc_.component_of[w] != c) continue;
        auto nv = u_.neighbors(v);
        auto nw = u_.neighbors(w);
        std::size_t i = 0, j = 0;
        while (i < nv.size() && j < nw.size()) {
          if (nv[i].first < nw[j].first) {
            ++i;
          } else if (nv[i].first > nw[j].first) {
            ++j;
          } else {
            if (scc_.component_of[nv[i].first] == c) ++thirds;
            ++i;
            ++j;
          }
        }
      }
    }
    comp_triangles_[c] = static_cast<double>(thirds) / 3.0;
    return comp_triangles_[c];
  }

  const UndirectedGraph& u_;
  const SccDecomposition& scc_;
  std::vector<std::uint32_t> degree_in_comp_;
  std::vector<double> comp_triangles_;  // -1 marks "not yet counted"
  std::vector<double> comp_triples_;
  std::vector<std::uint32_t> cross_degree_;
  std::vector<std::uint32_t> cross_stamp_;
  std::vector<NodeId> touched_;
  std::uint32_t epoch_ = 0;
};

bool adjacent(const UndirectedGraph& u, NodeId v, NodeId w) {
  auto nv = u.neighbors(v);
  auto it = std::lower_bound(nv.begin(), nv.end(), w,
                             [](const auto& entry, NodeId t) { return entry.first < t; });
  return it != nv.end() && it->first == w;
}

/// Mean local clustering coefficient over the union subgraph; nodes with
/// fewer than two union neighbors contribute 0.
double union_average_local(const UndirectedGraph& u, const SccDecomposition& scc,
                           std::uint32_t a, std::uint32_t b) {
  auto in_union = [&](NodeId v) {
    const std::uint32_t c = scc.component_of[v];
    return c == a || c == b;
  };
  double sum = 0.0;
  std::size_t count = 0;
  std::vector<NodeId> local;
  for (std::uint32_t comp : {a, b}) {
    for (NodeId v : scc.components[comp]) {
      ++count;
      local.clear();
      for (const auto& [w, weight] : u.neighbors(v)) {
        if (in_union(w)) local.push_back(w);
      }
      if (local.size() < 2) continue;
      std::size_t links = 0;
      for (std::size_t i = 0; i < local.size(); ++i) {
        for (std::size_t j = i + 1; j < local.size(); ++j) {
          if (adjacent(u, local[i], local[j])) ++links;
        }
      }
      sum += static_cast<double>(links) /
             binomial2(static_cast<double>(local.size()));
    }
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace

Partition detect_communities(const DirectedGraph& g, const DetectorConfig& cfg) {
  const std::size_t n = g.node_count();
  if (n == 0) return Partition{};

  const SccDecomposition scc = strongly_connected_components(g);
  const UndirectedGraph u = undirected_view(g);
  const std::size_t k = scc.component_count();

  // community[v] holds the owning component's ordinal until canonicalization.
  std::vector<std::uint32_t> community(n);
  for (NodeId v = 0; v < n; ++v) community[v] = scc.component_of[v];

  std::vector<bool> absorbed(k, false);
  PairCoefficientCache cache(u, scc);

  std::vector<std::uint32_t> candidates;
  std::vector<bool> candidate_seen(k, false);

  for (std::uint32_t s = 0; s < k; ++s) {
    if (absorbed[s]) continue;

    // Nearby = an edge in either direction between the node sets; only
    // components not yet absorbed into any community are up for grabs.
    candidates.clear();
    for (NodeId v : scc.components[s]) {
      for (const auto& [w, weight] : u.neighbors(v)) {
        const std::uint32_t c = scc.component_of[w];
        if (c == s || absorbed[c] || candidate_seen[c]) continue;
        candidate_seen[c] = true;
        candidates.push_back(c);
      }
    }
    if (candidates.empty()) continue;
    std::sort(candidates.begin(), candidates.end());
    for (std::uint32_t c : candidates) candidate_seen[c] = false;

    // Argmax of the aggregated coefficient; ties keep the smallest ordinal.
    std::uint32_t best = candidates.front();
    double best_score = -1.0;
    for (std::uint32_t c : candidates) {
      const double score =
          cfg.coefficient_strategy == CoefficientStrategy::global_transitivity
              ? cache.union_transitivity(s, c)
              : union_average_local(u, scc, s, c);
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }

    for (NodeId v : scc.components[best]) community[v] = s;
    absorbed[best] = true;
  }

  return Partition::from_assignment(community);
}

}  // namespace dcd

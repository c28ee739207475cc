#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dcd {

using NodeId = std::uint32_t;

struct Edge {
  NodeId source;
  NodeId target;
  double weight = 1.0;

  bool operator==(const Edge&) const = default;
};

/// Simple directed graph with positive edge weights. Nodes are dense indices
/// 0..n-1, each carrying the external name it was ingested under. Immutable
/// after construction and safe to share across threads for reading.
///
/// Rejected at construction: self-loops, duplicate directed edges,
/// out-of-range endpoints, non-positive or non-finite weights.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in insertion order.
  std::span<const Edge> edges() const { return edges_; }

  /// Out-neighbors of `v` as (target, weight), sorted by target.
  std::span<const std::pair<NodeId, double>> out_edges(NodeId v) const {
    return out_adjacency_.at(v);
  }

  bool has_edge(NodeId source, NodeId target) const;

  /// Stored weight of the edge source->target, 0 when absent.
  double edge_weight(NodeId source, NodeId target) const;

  /// Sum of out-edge weights of `v`.
  double out_strength(NodeId v) const { return out_strength_.at(v); }

  /// Sum of all edge weights.
  double total_weight() const { return total_weight_; }

  const std::string& label(NodeId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> index_of(std::string_view label) const;

  /// Structural equality: same labels in the same index order and the same
  /// directed edge set with identical weights (edge insertion order ignored).
  bool operator==(const DirectedGraph& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeId, double>>> out_adjacency_;
  std::vector<double> out_strength_;
  std::unordered_map<std::string, NodeId> index_by_label_;
  double total_weight_ = 0.0;
};

/// Result of induced_subgraph: the subgraph re-indexed densely plus the
/// mapping from each subgraph index back to the parent graph's index.
struct Subgraph {
  DirectedGraph graph;
  std::vector<NodeId> parent_index;
};

/// Parses edge-list text. Each non-empty, non-comment line is
/// "source target", "source target weight", or "NODE name" (declares an
/// isolated node). Lines whose first non-blank character is '#' are comments.
/// Node names are arbitrary non-whitespace tokens, indexed in order of first
/// appearance. '\n' and '\r\n' line endings are both accepted.
/// Throws ParseError (malformed line, self-loop, duplicate edge).
DirectedGraph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: text that re-parses to an identical graph.
/// Emits a NODE line per node (preserving index order) followed by one line
/// per edge; weights equal to 1 are omitted.
std::string format_edge_list(const DirectedGraph& g);

/// Subgraph induced by `nodes`: exactly those nodes and every edge with both
/// endpoints among them, re-indexed densely in ascending parent order.
/// Throws std::invalid_argument on out-of-range or duplicate indices.
Subgraph induced_subgraph(const DirectedGraph& g, std::span<const NodeId> nodes);

struct UndirectedEdge {
  NodeId u;  // u < v
  NodeId v;
  double weight;

  bool operator==(const UndirectedEdge&) const = default;
};

/// Symmetrized companion of a DirectedGraph; see undirected_view.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(std::size_t node_count, std::vector<UndirectedEdge> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const UndirectedEdge> edges() const { return edges_; }

  /// Neighbors of `v` as (neighbor, weight), sorted by neighbor.
  std::span<const std::pair<NodeId, double>> neighbors(NodeId v) const {
    return adjacency_.at(v);
  }

  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }

 private:
  std::vector<UndirectedEdge> edges_;
  std::vector<std::vector<std::pair<NodeId, double>>> adjacency_;
};

/// Undirected view: {i,j} exists iff i->j or j->i does; its weight is the sum
/// of the directed weights between i and j.
UndirectedGraph undirected_view(const DirectedGraph& g);

}  // namespace dcd

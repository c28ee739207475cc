#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcd/graph.hpp"

namespace dcd {

/// Assignment of every node to exactly one community. Ids are canonical:
/// 0..community_count()-1 in order of first appearance by node index, so two
/// partitions are equal iff they group nodes identically.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes an arbitrary per-node label vector.
  static Partition from_assignment(std::span<const std::uint32_t> raw);

  static Partition singletons(std::size_t node_count);

  std::size_t node_count() const { return assignment_.size(); }
  std::size_t community_count() const { return community_count_; }
  std::uint32_t community_of(NodeId v) const { return assignment_.at(v); }
  std::span<const std::uint32_t> assignment() const { return assignment_; }

  /// Node lists grouped by community id; nodes ascending within each.
  std::vector<std::vector<NodeId>> communities() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::uint32_t> assignment_;
  std::size_t community_count_ = 0;
};

/// Reads "node_label,community_id" lines (the `detect`/`lpa` output format).
/// Every node of `g` must appear exactly once; ids are canonicalized.
/// Lines whose first non-blank character is '#' are comments.
/// Throws ParseError on malformed input, unknown or repeated labels, and
/// std::invalid_argument when nodes of `g` are missing.
Partition parse_partition_csv(std::string_view text, const DirectedGraph& g);

/// One "node_label,community_id" line per node, in node index order.
std::string format_partition_csv(const Partition& p, const DirectedGraph& g);

}  // namespace dcd

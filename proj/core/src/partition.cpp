#include "dcd/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

#include "dcd/errors.hpp"

namespace dcd {

namespace {
constexpr std::uint32_t kUnmapped = ~std::uint32_t{0};
}

Partition Partition::from_assignment(std::span<const std::uint32_t> raw) {
  Partition p;
  p.assignment_.resize(raw.size());
  std::uint32_t next_id = 0;
  // Canonical ids: 0..n_C-1 in order of first appearance by node index.
  std::unordered_map<std::uint32_t, std::uint32_t> dense;
  dense.reserve(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    auto [it, inserted] = dense.try_emplace(raw[v], next_id);
    if (inserted) ++next_id;
    p.assignment_[v] = it->second;
  }
  p.community_count_ = next_id;
  return p;
}

Partition Partition::singletons(std::size_t node_count) {
  Partition p;
  p.assignment_.resize(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    p.assignment_[v] = static_cast<std::uint32_t>(v);
  }
  p.community_count_ = node_count;
  return p;
}

std::vector<std::vector<NodeId>> Partition::communities() const {
  std::vector<std::vector<NodeId>> groups(community_count_);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    groups[assignment_[v]].push_back(static_cast<NodeId>(v));
  }
  return groups;
}

Partition parse_partition_csv(std::string_view text, const DirectedGraph& g) {
  std::vector<std::uint32_t> raw(g.node_count(), kUnmapped);
  std::size_t assigned = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;

    // Labels may contain commas; the id is whatever follows the last one.
    std::size_t comma = line.rfind(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line_no, "expected 'node_label,community_id'");
    }
    std::string_view label = line.substr(first, comma - first);
    std::string_view id_token = line.substr(comma + 1);
    auto node = g.index_of(label);
    if (!node) {
      throw ParseError(line_no, fmt::format("unknown node label '{}'", label));
    }
    std::uint32_t id = 0;
    const char* end = id_token.data() + id_token.size();
    auto [ptr, ec] = std::from_chars(id_token.data(), end, id);
    if (ec != std::errc{} || ptr != end) {
      throw ParseError(line_no, fmt::format("malformed community id '{}'", id_token));
    }
    if (raw[*node] != kUnmapped) {
      throw ParseError(line_no, fmt::format("node '{}' assigned twice", label));
    }
    raw[*node] = id;
    ++assigned;
  }

  if (assigned != g.node_count()) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (raw[v] == kUnmapped) {
        throw std::invalid_argument(
            fmt::format("partition does not cover node '{}'", g.label(v)));
      }
    }
  }
  return Partition::from_assignment(raw);
}

std::string format_partition_csv(const Partition& p, const DirectedGraph& g) {
  if (p.node_count() != g.node_count()) {
    throw std::invalid_argument("partition/graph node count mismatch");
  }
  std::string out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out += fmt::format("{},{}\n", g.label(v), p.community_of(v));
  }
  return out;
}

}  // namespace dcd

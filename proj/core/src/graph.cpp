#include "dcd/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

#include "dcd/errors.hpp"

namespace dcd {

namespace {

std::uint64_t pack_pair(NodeId a, NodeId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  out_adjacency_.resize(n);
  out_strength_.assign(n, 0.0);
  index_by_label_.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!index_by_label_.emplace(labels_[v], v).second) {
      throw std::invalid_argument(fmt::format("duplicate node label '{}'", labels_[v]));
    }
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    if (e.source >= n || e.target >= n) {
      throw std::invalid_argument(
          fmt::format("edge endpoint out of range: {}->{} in a {}-node graph",
                      e.source, e.target, n));
    }
    if (e.source == e.target) {
      throw std::invalid_argument(
          fmt::format("self-loop on node '{}'", labels_[e.source]));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument(fmt::format(
          "edge {}->{}: weight must be a positive finite number, got {}",
          labels_[e.source], labels_[e.target], e.weight));
    }
    if (!seen.insert(pack_pair(e.source, e.target)).second) {
      throw std::invalid_argument(fmt::format("duplicate edge {}->{}",
                                              labels_[e.source], labels_[e.target]));
    }
    out_adjacency_[e.source].emplace_back(e.target, e.weight);
    out_strength_[e.source] += e.weight;
    total_weight_ += e.weight;
  }
  for (auto& adj : out_adjacency_) {
    std::sort(adj.begin(), adj.end());
  }
}

bool DirectedGraph::has_edge(NodeId source, NodeId target) const {
  const auto& adj = out_adjacency_.at(source);
  auto it = std::lower_bound(adj.begin(), adj.end(), target,
                             [](const auto& entry, NodeId t) { return entry.first < t; });
  return it != adj.end() && it->first == target;
}

double DirectedGraph::edge_weight(NodeId source, NodeId target) const {
  const auto& adj = out_adjacency_.at(source);
  auto it = std::lower_bound(adj.begin(), adj.end(), target,
                             [](const auto& entry, NodeId t) { return entry.first < t; });
  return (it != adj.end() && it->first == target) ? it->second : 0.0;
}

std::optional<NodeId> DirectedGraph::index_of(std::string_view label) const {
  auto it = index_by_label_.find(std::string(label));
  return it == index_by_label_.end() ? std::nullopt : std::optional<NodeId>(it->second);
}

bool DirectedGraph::operator==(const DirectedGraph& other) const {
  if (labels_ != other.labels_) return false;
  auto sorted = [](std::vector<Edge> es) {
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    return es;
  };
  return sorted(edges_) == sorted(other.edges_);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

double parse_weight(std::string_view token, std::size_t line_no) {
  double w = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, w);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, fmt::format("malformed weight '{}'", token));
  }
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw ParseError(line_no, fmt::format("non-positive weight '{}'", token));
  }
  return w;
}

}  // namespace

DirectedGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_map<std::string, NodeId> index;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](std::string_view name) -> NodeId {
    auto [it, inserted] = index.try_emplace(std::string(name),
                                            static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(name);
    return it->second;
  };

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

    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#') continue;

    if (tokens[0] == "NODE") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "NODE line must be 'NODE name'");
      }
      intern(tokens[1]);
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(line_no,
                       fmt::format("expected 'source target [weight]', got {} token(s)",
                                   tokens.size()));
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, fmt::format("self-loop on node '{}'", tokens[0]));
    }
    double weight = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
    NodeId source = intern(tokens[0]);
    NodeId target = intern(tokens[1]);
    if (!seen.insert(pack_pair(source, target)).second) {
      throw ParseError(line_no,
                       fmt::format("duplicate edge {} -> {}", tokens[0], tokens[1]));
    }
    edges.push_back(Edge{source, target, weight});
  }
  return DirectedGraph(std::move(labels), std::move(edges));
}

std::string format_edge_list(const DirectedGraph& g) {
  auto serializable = [](const std::string& label) {
    if (label.empty() || label == "NODE" || label.front() == '#') return false;
    return std::none_of(label.begin(), label.end(), [](unsigned char c) {
      return std::isspace(c);
    });
  };
  std::string out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::string& label = g.label(v);
    if (!serializable(label)) {
      throw std::invalid_argument(
          fmt::format("label '{}' cannot be written as an edge-list token", label));
    }
    out += fmt::format("NODE {}\n", label);
  }
  for (const Edge& e : g.edges()) {
    if (e.weight == 1.0) {
      out += fmt::format("{} {}\n", g.label(e.source), g.label(e.target));
    } else {
      out += fmt::format("{} {} {}\n", g.label(e.source), g.label(e.target), e.weight);
    }
  }
  return out;
}

Subgraph induced_subgraph(const DirectedGraph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("induced_subgraph: duplicate node index");
  }
  if (!sorted.empty() && sorted.back() >= g.node_count()) {
    throw std::invalid_argument(
        fmt::format("induced_subgraph: node index {} out of range", sorted.back()));
  }

  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> to_sub(g.node_count(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    to_sub[sorted[i]] = static_cast<NodeId>(i);
    labels.push_back(g.label(sorted[i]));
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (to_sub[e.source] != kAbsent && to_sub[e.target] != kAbsent) {
      edges.push_back(Edge{to_sub[e.source], to_sub[e.target], e.weight});
    }
  }
  return Subgraph{DirectedGraph(std::move(labels), std::move(edges)), std::move(sorted)};
}

UndirectedGraph::UndirectedGraph(std::size_t node_count, std::vector<UndirectedEdge> edges)
    : edges_(std::move(edges)) {
  adjacency_.resize(node_count);
  for (const UndirectedEdge& e : edges_) {
    adjacency_[e.u].emplace_back(e.v, e.weight);
    adjacency_[e.v].emplace_back(e.u, e.weight);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
  }
}

UndirectedGraph undirected_view(const DirectedGraph& g) {
  // Collect (min, max) endpoint pairs, then merge parallel directions.
  std::vector<std::tuple<NodeId, NodeId, double>> items;
  items.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    NodeId u = std::min(e.source, e.target);
    NodeId v = std::max(e.source, e.target);
    items.emplace_back(u, v, e.weight);
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b));
            });

  std::vector<UndirectedEdge> merged;
  merged.reserve(items.size());
  for (const auto& [u, v, w] : items) {
    if (!merged.empty() && merged.back().u == u && merged.back().v == v) {
      merged.back().weight += w;
    } else {
      merged.push_back(UndirectedEdge{u, v, w});
    }
  }
  return UndirectedGraph(g.node_count(), std::move(merged));
}

}  // namespace dcd

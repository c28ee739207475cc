#include <doctest.h>

#include <stdexcept>

#include "dcd/errors.hpp"
#include "dcd/graph.hpp"
#include "oracles.hpp"

using namespace dcd;
using namespace dcd::testing;

TEST_CASE("parse_edge_list: basic triangle") {
  DirectedGraph g = parse_edge_list("a b\nb c\nc a");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
  CHECK(g.label(2) == "c");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(1, 0));
}

TEST_CASE("parse_edge_list: empty input") {
  CHECK(parse_edge_list("").node_count() == 0);
  CHECK(parse_edge_list("").edge_count() == 0);
  CHECK(parse_edge_list("\n   \n\t\n").node_count() == 0);
}

TEST_CASE("parse_edge_list: weights, comments, NODE declarations") {
  DirectedGraph g = parse_edge_list("a b 2.5\n# comment\nNODE z");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_weight(0, 1) == 2.5);
  CHECK(g.label(2) == "z");
  CHECK(g.index_of("z").value() == 2);
  CHECK(!g.index_of("missing").has_value());
}

TEST_CASE("parse_edge_list: crlf and indented comments") {
  DirectedGraph g = parse_edge_list("a b\r\n  # note\r\nb c\r\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse_edge_list: NODE may re-declare an existing node") {
  DirectedGraph g = parse_edge_list("a b\nNODE a\nNODE c\nNODE c");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse_edge_list: malformed lines carry the line number") {
  CHECK_THROWS_AS(parse_edge_list("a b\nc"), ParseError);
  try {
    parse_edge_list("a b\nc");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list("a b c d"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("NODE"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("NODE a b"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b xyz"), ParseError);
}

TEST_CASE("parse_edge_list: weight must be positive and finite") {
  CHECK_THROWS_AS(parse_edge_list("a b 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b -1.5"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b inf"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b nan"), ParseError);
}

TEST_CASE("parse_edge_list: self-loops and duplicates rejected") {
  CHECK_THROWS_AS(parse_edge_list("a a"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b\na b"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b\na b 3.0"), ParseError);
  // opposite direction is a different edge
  CHECK_NOTHROW(parse_edge_list("a b\nb a"));
}

TEST_CASE("DirectedGraph: constructor validates invariants") {
  CHECK_THROWS_AS(make_graph(2, {{0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1, 1.0}, {0, 1, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1, -2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedGraph({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("DirectedGraph: degree and weight queries") {
  DirectedGraph g = make_graph(3, {{0, 1, 2.0}, {0, 2, 0.5}, {2, 0, 1.0}});
  CHECK(g.out_strength(0) == 2.5);
  CHECK(g.out_strength(1) == 0.0);
  CHECK(g.total_weight() == 3.5);
  CHECK(g.edge_weight(0, 2) == 0.5);
  CHECK(g.edge_weight(2, 1) == 0.0);
  CHECK(g.out_edges(0).size() == 2);
}

TEST_CASE("induced_subgraph: cycle restricted to two nodes") {
  DirectedGraph g = parse_edge_list("a b\nb c\nc a");
  Subgraph sub = induced_subgraph(g, std::vector<NodeId>{0, 1});
  CHECK(sub.graph.node_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.graph.has_edge(0, 1));
  CHECK(sub.graph.label(0) == "a");
  CHECK(sub.graph.label(1) == "b");
  CHECK(sub.parent_index == std::vector<NodeId>{0, 1});
}

TEST_CASE("induced_subgraph: full node set is the identity") {
  SplitMix64 rng(31);
  DirectedGraph g = random_graph(rng, 9, 0.3, true);
  std::vector<NodeId> all;
  for (NodeId v = 0; v < g.node_count(); ++v) all.push_back(v);
  Subgraph sub = induced_subgraph(g, all);
  CHECK(sub.graph == g);
}

TEST_CASE("induced_subgraph: empty set and errors") {
  DirectedGraph g = parse_edge_list("a b");
  CHECK(induced_subgraph(g, {}).graph.node_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(g, std::vector<NodeId>{5}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, std::vector<NodeId>{0, 0}), std::invalid_argument);
}

TEST_CASE("induced_subgraph: edge count matches brute-force enumeration") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng.uniform_below(12);
    DirectedGraph g = random_graph(rng, n, 0.05 + 0.4 * rng.uniform_unit());
    std::vector<NodeId> subset;
    for (NodeId v = 0; v < n; ++v) {
      if (rng.uniform_below(2) == 0) subset.push_back(v);
    }
    Subgraph sub = induced_subgraph(g, subset);
    std::size_t expected = 0;
    for (NodeId u : subset) {
      for (NodeId v : subset) {
        if (u != v && g.has_edge(u, v)) ++expected;
      }
    }
    CHECK(sub.graph.edge_count() == expected);
    CHECK(sub.graph.node_count() == subset.size());
  }
}

TEST_CASE("undirected_view: antiparallel pair merges into one weighted edge") {
  DirectedGraph g = parse_edge_list("a b\nb a");
  UndirectedGraph u = undirected_view(g);
  CHECK(u.edge_count() == 1);
  CHECK(u.edges()[0].weight == 2.0);
  CHECK(u.degree(0) == 1);
}

TEST_CASE("undirected_view: directed cycle becomes a triangle") {
  UndirectedGraph u = undirected_view(parse_edge_list("a b\nb c\nc a"));
  CHECK(u.edge_count() == 3);
  for (const UndirectedEdge& e : u.edges()) CHECK(e.weight == 1.0);
  CHECK(undirected_view(DirectedGraph{}).node_count() == 0);
}

TEST_CASE("undirected_view: symmetrizing twice equals symmetrizing once") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    DirectedGraph g = random_graph(rng, 2 + rng.uniform_below(10),
                                   0.4 * rng.uniform_unit(), true);
    UndirectedGraph once = undirected_view(g);
    // re-embed the undirected edges as single directed edges and symmetrize again
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    std::vector<Edge> directed;
    for (const UndirectedEdge& e : once.edges()) {
      directed.push_back(Edge{e.u, e.v, e.weight});
    }
    UndirectedGraph twice = undirected_view(DirectedGraph(labels, directed));
    REQUIRE(twice.edge_count() == once.edge_count());
    for (std::size_t i = 0; i < once.edge_count(); ++i) {
      CHECK(twice.edges()[i] == once.edges()[i]);
    }
  }
}

TEST_CASE("format_edge_list: round-trips through the parser") {
  SplitMix64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform_below(12);
    DirectedGraph g = random_graph(rng, n, 0.3 * rng.uniform_unit(), true);
    DirectedGraph back = parse_edge_list(format_edge_list(g));
    CHECK(back == g);
  }
  // isolated nodes survive the trip
  DirectedGraph g = parse_edge_list("NODE only\nNODE other");
  CHECK(parse_edge_list(format_edge_list(g)) == g);
}

TEST_CASE("format_edge_list: rejects labels the grammar cannot express") {
  CHECK_THROWS_AS(format_edge_list(DirectedGraph({"#bad"}, {})), std::invalid_argument);
  CHECK_THROWS_AS(format_edge_list(DirectedGraph({"has space"}, {})), std::invalid_argument);
  CHECK_THROWS_AS(format_edge_list(DirectedGraph({"NODE"}, {})), std::invalid_argument);
}

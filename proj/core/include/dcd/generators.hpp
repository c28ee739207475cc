#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dcd/graph.hpp"

namespace dcd {

/// Perturbed copies of the base networks: each output picks a base uniformly
/// at random and removes exactly one uniformly random directed edge from it.
/// Repeats among the outputs are permitted. Deterministic under `seed`.
/// Throws when `bases` is empty or contains an edgeless graph.
std::vector<DirectedGraph> generate_perturbed_networks(
    std::span<const DirectedGraph> bases, std::size_t count, std::uint64_t seed);

/// Seeded uniform random directed graph: every ordered pair (i, j), i != j,
/// becomes an edge independently with probability mean_out_degree/(nodes-1).
/// No self-loops, no duplicates, weights all 1. Node labels are "0".."n-1".
/// Requires nodes >= 2 and 0 < mean_out_degree <= nodes-1.
DirectedGraph generate_synthetic_large(std::size_t nodes, double mean_out_degree,
                                       std::uint64_t seed);

}  // namespace dcd

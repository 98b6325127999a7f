#pragma once

#include "hallmatch/graph.hpp"

namespace hallmatch {

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm, O(n^3)).
Matching max_matching(const Graph& g);

/// Largest edge count accepted by brute_force_matching.
inline constexpr std::size_t kBruteForceMaxEdges = 24;

/// Maximum matching by exhaustive include/exclude branching over the edge
/// list. Throws std::invalid_argument when m > kBruteForceMaxEdges.
Matching brute_force_matching(const Graph& g);

}  // namespace hallmatch

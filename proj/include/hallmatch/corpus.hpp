#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hallmatch/generators.hpp"

namespace hallmatch {

/// Seeded test corpora. Instance i uses seed base_seed + i; sizes and edge
/// probabilities are derived from that seed, so a corpus is a pure function
/// of its options.
struct CorpusOptions {
  std::size_t seeds = 50;
  std::uint64_t base_seed = 0;
  std::size_t max_n = 120;
};

/// Two graphs per seed: planar_triangulation and planar_subgraph (p cycling
/// through 0.3 .. 0.9), with n drawn from [4, max_n].
std::vector<GeneratedGraph> planar_corpus(const CorpusOptions& options);

/// One forest_union per seed, alpha cycling through `alphas`.
std::vector<GeneratedGraph> forest_corpus(const CorpusOptions& options,
                                          std::span<const std::size_t> alphas);

/// random_small graphs with 2 <= n <= min(max_n, 10).
std::vector<GeneratedGraph> small_corpus(const CorpusOptions& options);

/// Stars, paths, cycles, grids and the net graph.
std::vector<GeneratedGraph> fixture_corpus();

}  // namespace hallmatch

#include "hallmatch/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallmatch/rng.hpp"

namespace hallmatch {
namespace {

std::size_t draw_size(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  Rng rng(mix_seed(seed, 7));
  return lo + rng.below(hi - lo + 1);
}

}  // namespace

std::vector<GeneratedGraph> planar_corpus(const CorpusOptions& options) {
  if (options.max_n < 4) throw std::invalid_argument("planar corpus needs max_n >= 4");
  std::vector<GeneratedGraph> out;
  for (std::size_t i = 0; i < options.seeds; ++i) {
    const std::uint64_t seed = options.base_seed + i;
    const std::size_t n = draw_size(seed, 4, options.max_n);
    out.push_back(planar_triangulation(n, seed));
    out.push_back(planar_subgraph(n, 0.3 + 0.1 * static_cast<double>(i % 7), seed));
  }
  return out;
}

std::vector<GeneratedGraph> forest_corpus(const CorpusOptions& options,
                                          std::span<const std::size_t> alphas) {
  if (alphas.empty()) throw std::invalid_argument("forest corpus needs at least one alpha");
  if (options.max_n < 2) throw std::invalid_argument("forest corpus needs max_n >= 2");
  std::vector<GeneratedGraph> out;
  for (std::size_t i = 0; i < options.seeds; ++i) {
    const std::uint64_t seed = options.base_seed + i;
    const std::size_t n = draw_size(seed, 2, options.max_n);
    // Mostly spanning forests, sometimes sparser ones.
    const std::size_t per_forest = (n - 1) - (i % 3) * ((n - 1) / 4);
    out.push_back(forest_union(n, alphas[i % alphas.size()], per_forest, seed));
  }
  return out;
}

std::vector<GeneratedGraph> small_corpus(const CorpusOptions& options) {
  const std::size_t hi = std::clamp<std::size_t>(options.max_n, 2, 10);
  std::vector<GeneratedGraph> out;
  for (std::size_t i = 0; i < options.seeds; ++i) {
    const std::uint64_t seed = options.base_seed + i;
    out.push_back(random_small(draw_size(seed, 2, hi), 0.15 + 0.1 * static_cast<double>(i % 6), seed));
  }
  return out;
}

std::vector<GeneratedGraph> fixture_corpus() {
  std::vector<GeneratedGraph> out;
  for (std::size_t k = 1; k <= 8; ++k) out.push_back(star(k));
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(path(n));
  for (std::size_t n = 3; n <= 9; ++n) out.push_back(cycle(n));
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t c = r; c <= 5; ++c) out.push_back(grid(r, c));
  }
  out.push_back(net_graph());
  return out;
}

}  // namespace hallmatch

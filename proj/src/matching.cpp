#include "hallmatch/matching.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

namespace hallmatch {
namespace {

constexpr int kNone = -1;

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(static_cast<int>(g.num_vertices())), mate_(n_, kNone), parent_(n_), base_(n_),
        in_tree_(n_), in_blossom_(n_) {}

  Matching solve() {
    seed_greedy();
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      const int end = find_augmenting_path(root);
      if (end != kNone) flip_path(end);
    }
    Matching m;
    for (int u = 0; u < n_; ++u) {
      if (mate_[u] > u) m.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(mate_[u]));
    }
    return m;
  }

 private:
  void seed_greedy() {
    for (int u = 0; u < n_; ++u) {
      if (mate_[u] != kNone) continue;
      for (Vertex w : g_.neighbors(static_cast<Vertex>(u))) {
        const int v = static_cast<int>(w);
        if (mate_[v] == kNone) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
  }

  // Lowest common ancestor of the blossom bases of a and b in the
  // alternating forest.
  int lowest_common_base(int a, int b) const {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int stem, int child) {
    while (base_[v] != stem) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    std::queue<int> queue;
    in_tree_[root] = true;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) {
        const int to = static_cast<int>(w);
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          // Odd cycle: contract the blossom into its base.
          const int stem = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, stem, to);
          mark_path(to, stem, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = stem;
              if (!in_tree_[i]) {
                in_tree_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          in_tree_[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
    return kNone;
  }

  void flip_path(int v) {
    while (v != kNone) {
      const int pv = parent_[v];
      const int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Graph& g) : edges_(g.edges()), used_(g.num_vertices(), false) {}

  Matching solve() {
    branch(0);
    Matching m;
    for (std::size_t i : best_) m.edges.push_back(edges_[i]);
    return m;
  }

 private:
  void branch(std::size_t next) {
    if (current_.size() > best_.size()) best_ = current_;
    if (next == edges_.size()) return;
    // Prune when even taking every remaining edge cannot beat the best.
    if (current_.size() + (edges_.size() - next) <= best_.size()) return;

    const Edge& e = edges_[next];
    if (!used_[e.u] && !used_[e.v]) {
      used_[e.u] = used_[e.v] = true;
      current_.push_back(next);
      branch(next + 1);
      current_.pop_back();
      used_[e.u] = used_[e.v] = false;
    }
    branch(next + 1);
  }

  std::vector<Edge> edges_;
  std::vector<bool> used_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

Matching max_matching(const Graph& g) { return Blossom(g).solve(); }

Matching brute_force_matching(const Graph& g) {
  if (g.num_edges() > kBruteForceMaxEdges) {
    throw std::invalid_argument("brute_force_matching: graph has " + std::to_string(g.num_edges()) +
                                " edges, limit is " + std::to_string(kBruteForceMaxEdges));
  }
  return ExhaustiveSearch(g).solve();
}

}  // namespace hallmatch

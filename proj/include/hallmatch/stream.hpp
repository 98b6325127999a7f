#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hallmatch/graph.hpp"

namespace hallmatch {

/// One vertex arrival: the vertex and its complete neighbour list.
struct StreamRecord {
  Vertex vertex = 0;
  std::vector<Vertex> neighbors;
};

/// Vertex-arrival stream: every vertex arrives exactly once with its full
/// adjacency list, so each edge is listed twice.
struct VertexArrivalStream {
  std::size_t num_vertices = 0;
  std::vector<StreamRecord> records;
};

class InconsistentStream : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Records in the order given by `order`, which must be a permutation of
/// 0..n-1 (std::invalid_argument otherwise).
VertexArrivalStream stream_from_graph(const Graph& g, std::span<const Vertex> order);

/// Rebuilds the graph, throwing InconsistentStream if the records disagree.
Graph graph_from_stream(const VertexArrivalStream& stream);

/// Text format: one record per line, "v: w1 w2 ...", '#' comments. Labels are
/// arbitrary whitespace-free tokens, renumbered densely in order of first
/// appearance.
VertexArrivalStream read_stream(std::istream& in);
void write_stream(std::ostream& out, const VertexArrivalStream& stream);

/// Words of state held per vertex by LsStreamCounter: arrival flag, degree,
/// superiority flag, edge fingerprint.
inline constexpr std::size_t kStreamWordsPerVertex = 4;
/// Documented bound: peak_words <= kStreamSpaceConstant * n. The extra word
/// per vertex covers the buffered current record (at most n - 1 ids).
inline constexpr std::size_t kStreamSpaceConstant = kStreamWordsPerVertex + 1;

/// One-pass exact |L(G)| counter for vertex-arrival streams.
///
/// A record carries the complete neighbour list, so each vertex's final
/// degree is known when it arrives. On arrival of v, every already-arrived
/// neighbour w is compared both ways: v is superior if deg(w) <= deg(v) and
/// w is superior if deg(v) <= deg(w). Neighbours that have not arrived yet
/// are compared when they do. Nothing but the current record is buffered.
///
/// Consistency (u lists v iff v lists u) is checked with a per-vertex
/// additive fingerprint: each listing of a later neighbour adds its hash,
/// each back-reference from that neighbour subtracts it, and all
/// fingerprints must be zero at the end.
class LsStreamCounter {
 public:
  explicit LsStreamCounter(std::size_t num_vertices);

  void consume(Vertex v, std::span<const Vertex> neighbors);

  /// Number of locally superior vertices. Throws InconsistentStream if a
  /// vertex never arrived or the adjacency lists disagree.
  std::size_t finish();

  /// Largest number of machine words of state held at any point.
  [[nodiscard]] std::size_t peak_words() const { return peak_words_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> arrived_;
  std::vector<std::uint64_t> degree_;
  std::vector<std::uint64_t> superior_;
  std::vector<std::uint64_t> fingerprint_;
  std::vector<Vertex> record_;
  std::size_t arrivals_ = 0;
  std::size_t peak_words_ = 0;
};

struct StreamCount {
  std::size_t ls = 0;
  std::size_t peak_words = 0;
};

StreamCount one_pass_ls_count(const VertexArrivalStream& stream);

}  // namespace hallmatch

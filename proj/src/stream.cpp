#include "hallmatch/stream.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "hallmatch/io.hpp"
#include "hallmatch/rng.hpp"

namespace hallmatch {
namespace {

std::uint64_t vertex_hash(Vertex v) { return mix_seed(v, 0x5eed); }

}  // namespace

VertexArrivalStream stream_from_graph(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) throw std::invalid_argument("arrival order must list every vertex once");
  std::vector<bool> seen(n, false);
  VertexArrivalStream stream;
  stream.num_vertices = n;
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("arrival order is not a permutation");
    seen[v] = true;
    const auto nbrs = g.neighbors(v);
    stream.records.push_back({v, std::vector<Vertex>(nbrs.begin(), nbrs.end())});
  }
  return stream;
}

Graph graph_from_stream(const VertexArrivalStream& stream) {
  const std::size_t n = stream.num_vertices;
  std::vector<Edge> edges;
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> lists(n);
  for (const auto& rec : stream.records) {
    if (rec.vertex >= n || seen[rec.vertex]) throw InconsistentStream("vertex arrives twice or out of range");
    seen[rec.vertex] = true;
    lists[rec.vertex] = rec.neighbors;
    std::sort(lists[rec.vertex].begin(), lists[rec.vertex].end());
  }
  for (Vertex u = 0; u < n; ++u) {
    if (!seen[u]) throw InconsistentStream("vertex " + std::to_string(u) + " never arrives");
    for (Vertex v : lists[u]) {
      if (v >= n || !std::binary_search(lists[v].begin(), lists[v].end(), u)) {
        throw InconsistentStream("asymmetric adjacency " + std::to_string(u) + "->" + std::to_string(v));
      }
      if (u < v) edges.emplace_back(u, v);
    }
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw InconsistentStream(e.what());
  }
}

VertexArrivalStream read_stream(std::istream& in) {
  std::unordered_map<std::string, Vertex> ids;
  const auto id_of = [&](const std::string& label) {
    const auto [it, fresh] = ids.try_emplace(label, static_cast<Vertex>(ids.size()));
    return it->second;
  };

  VertexArrivalStream stream;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'v: w1 w2 ...'");
    }
    std::istringstream head(line.substr(0, colon));
    std::string label;
    if (!(head >> label)) throw ParseError("line " + std::to_string(line_no) + ": missing vertex label");
    if (std::string extra; head >> extra) {
      throw ParseError("line " + std::to_string(line_no) + ": one vertex label per record");
    }
    StreamRecord rec;
    rec.vertex = id_of(label);
    std::istringstream tail(line.substr(colon + 1));
    for (std::string tok; tail >> tok;) rec.neighbors.push_back(id_of(tok));
    stream.records.push_back(std::move(rec));
  }
  stream.num_vertices = ids.size();
  return stream;
}

void write_stream(std::ostream& out, const VertexArrivalStream& stream) {
  for (const auto& rec : stream.records) {
    out << rec.vertex << ':';
    for (Vertex w : rec.neighbors) out << ' ' << w;
    out << '\n';
  }
}

LsStreamCounter::LsStreamCounter(std::size_t num_vertices)
    : n_(num_vertices), arrived_(n_, 0), degree_(n_, 0), superior_(n_, 0), fingerprint_(n_, 0) {
  peak_words_ = kStreamWordsPerVertex * n_;
}

void LsStreamCounter::consume(Vertex v, std::span<const Vertex> neighbors) {
  if (v >= n_) throw InconsistentStream("vertex " + std::to_string(v) + " out of range");
  if (arrived_[v]) throw InconsistentStream("vertex " + std::to_string(v) + " arrives twice");

  record_.assign(neighbors.begin(), neighbors.end());
  std::sort(record_.begin(), record_.end());
  if (std::adjacent_find(record_.begin(), record_.end()) != record_.end()) {
    throw InconsistentStream("vertex " + std::to_string(v) + " lists a neighbour twice");
  }
  peak_words_ = std::max(peak_words_, kStreamWordsPerVertex * n_ + record_.size());

  arrived_[v] = 1;
  ++arrivals_;
  degree_[v] = record_.size();
  for (Vertex w : record_) {
    if (w >= n_ || w == v) throw InconsistentStream("bad neighbour in record of " + std::to_string(v));
    if (arrived_[w]) {
      if (degree_[w] <= degree_[v]) superior_[v] = 1;
      if (degree_[v] <= degree_[w]) superior_[w] = 1;
      fingerprint_[w] -= vertex_hash(v);
    } else {
      fingerprint_[v] += vertex_hash(w);
    }
  }
  record_.clear();
}

std::size_t LsStreamCounter::finish() {
  if (arrivals_ != n_) {
    throw InconsistentStream(std::to_string(n_ - arrivals_) + " vertices never arrived");
  }
  std::size_t count = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    if (fingerprint_[v] != 0) {
      throw InconsistentStream("adjacency lists disagree at vertex " + std::to_string(v));
    }
    count += superior_[v];
  }
  return count;
}

StreamCount one_pass_ls_count(const VertexArrivalStream& stream) {
  LsStreamCounter counter(stream.num_vertices);
  for (const auto& rec : stream.records) counter.consume(rec.vertex, rec.neighbors);
  StreamCount out;
  out.ls = counter.finish();
  out.peak_words = counter.peak_words();
  return out;
}

}  // namespace hallmatch

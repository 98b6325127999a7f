#include "hallmatch/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hallmatch {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits a line into its data part and, when present, the comment text.
std::pair<std::string, std::string> split_comment(const std::string& line) {
  const auto hash = line.find('#');
  if (hash == std::string::npos) return {trim(line), {}};
  return {trim(line.substr(0, hash)), trim(line.substr(hash + 1))};
}

std::uint64_t parse_count(const std::string& token, std::size_t line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError("line " + std::to_string(line_no) + ": integer too large");
  }
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
  Metadata metadata;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto [data, comment] = split_comment(line);
    if (data.empty() && !comment.empty()) {
      if (const auto colon = comment.find(':'); colon != std::string::npos) {
        metadata.emplace_back(trim(comment.substr(0, colon)), trim(comment.substr(colon + 1)));
      }
    }
    if (data.empty()) continue;
    std::istringstream tokens(data);
    std::vector<std::string> row;
    for (std::string tok; tokens >> tok;) row.push_back(tok);
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }

  if (rows.empty()) throw ParseError("missing 'n m' header");
  if (rows[0].size() != 2) throw ParseError("line " + std::to_string(row_lines[0]) + ": header must be 'n m'");
  const auto n = parse_count(rows[0][0], row_lines[0]);
  const auto m = parse_count(rows[0][1], row_lines[0]);
  if (rows.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(rows.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) {
      throw ParseError("line " + std::to_string(row_lines[i]) + ": edge must be 'u v'");
    }
    const auto u = parse_count(rows[i][0], row_lines[i]);
    const auto v = parse_count(rows[i][1], row_lines[i]);
    if (u >= n || v >= n) {
      throw ParseError("line " + std::to_string(row_lines[i]) + ": vertex id out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  try {
    return {Graph(n, edges), std::move(metadata)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) out << "# " << key << ": " << value << '\n';
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace hallmatch

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hallmatch/graph.hpp"

namespace hallmatch {

/// Malformed graph or stream text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Key/value pairs carried in "# key: value" comment lines.
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct EdgeListFile {
  Graph graph;
  Metadata metadata;
};

/// Edge-list text: header "n m", then m lines "u v" with 0-based ids.
/// '#' starts a comment; "# key: value" comments are collected as metadata.
EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

/// Writes metadata comments, the header and the edges in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g, const Metadata& metadata = {});

}  // namespace hallmatch

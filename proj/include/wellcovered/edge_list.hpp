#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wellcovered/graph.hpp"

namespace wc {

// Text format:
//   # comment lines anywhere
//   n <count>
//   <u> <v>          one edge per line, 0-based, single space separated
// Writers emit comments first, then the header, then edges sorted by
// (min endpoint, max endpoint).

struct EdgeListFile {
  Graph graph;
  /// Comment lines in file order, including the leading '#'.
  std::vector<std::string> comments;
};

/// Throws ParseError (with 1-based line number) on malformed input, including
/// out-of-range endpoints, self-loops and disconnected graphs.
EdgeListFile parse_edge_list(std::string_view text);
EdgeListFile read_edge_list(const std::filesystem::path& path);

std::string write_edge_list(const Graph& g, const std::vector<std::string>& comments = {});
void write_edge_list_file(const std::filesystem::path& path, const Graph& g,
                          const std::vector<std::string>& comments = {});

}  // namespace wc

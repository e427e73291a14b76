#include "wellcovered/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "wellcovered/errors.hpp"

namespace wc {

namespace {

std::optional<std::size_t> parse_index(std::string_view tok) {
  if (tok.empty() || tok.size() > 18) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

// Splits "a b" on exactly one space.
std::optional<std::pair<std::string_view, std::string_view>> split_pair(std::string_view line) {
  auto sp = line.find(' ');
  if (sp == std::string_view::npos || line.find(' ', sp + 1) != std::string_view::npos) return std::nullopt;
  return std::pair{line.substr(0, sp), line.substr(sp + 1)};
}

}  // namespace

EdgeListFile parse_edge_list(std::string_view text) {
  std::vector<std::string> comments;
  std::optional<std::size_t> n;
  std::size_t header_line = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      comments.emplace_back(line);
      continue;
    }
    auto parts = split_pair(line);
    if (!parts) throw ParseError(line_no, "expected two fields separated by a single space");
    if (!n) {
      if (parts->first != "n") throw ParseError(line_no, "expected header 'n <count>'");
      n = parse_index(parts->second);
      if (!n || *n == 0) throw ParseError(line_no, "vertex count must be a positive decimal integer");
      header_line = line_no;
      continue;
    }
    auto u = parse_index(parts->first);
    auto v = parse_index(parts->second);
    if (!u || !v) throw ParseError(line_no, "edge endpoints must be decimal integers");
    if (*u >= *n || *v >= *n) throw ParseError(line_no, "edge endpoint out of range 0.." + std::to_string(*n - 1));
    if (*u == *v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
    edges.emplace_back(*u, *v);
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n <count>'");
  if (!is_connected(*n, edges)) throw ParseError(header_line, "graph is disconnected");
  return EdgeListFile{Graph::build(*n, edges), std::move(comments)};
}

EdgeListFile read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) {
    if (c.empty() || c.front() != '#') out += "# ";
    out += c;
    out += '\n';
  }
  out += "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g, const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << write_edge_list(g, comments);
}

}  // namespace wc

#include "glrank/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <optional>
#include <set>
#include <sstream>

#include "glrank/errors.hpp"

namespace glrank {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool read_index(std::istringstream& ss, long long& value) {
  if (!(ss >> value)) return false;
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> p;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ss(strip_comment(raw));
    std::string tag;
    if (!(ss >> tag)) continue;
    if (!p) {
      long long count = 0;
      if (tag != "p") throw ParseError(line_no, "expected 'p <count>' header, got '" + tag + "'");
      if (!read_index(ss, count) || count < 1) throw ParseError(line_no, "vertex count must be a positive integer");
      std::string extra;
      if (ss >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
      p = static_cast<std::size_t>(count);
      continue;
    }
    if (tag != "e") throw ParseError(line_no, "expected 'e <i> <j>', got '" + tag + "'");
    long long i = 0;
    long long j = 0;
    if (!read_index(ss, i) || !read_index(ss, j)) throw ParseError(line_no, "edge needs two integer endpoints");
    std::string extra;
    if (ss >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= *p || static_cast<std::size_t>(j) >= *p) {
      throw ParseError(line_no, "endpoint out of range [0," + std::to_string(*p) + ")");
    }
    if (i == j) throw ParseError(line_no, "self-loop at vertex " + std::to_string(i));
    // std::minmax on temporaries would hand back dangling references.
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(j);
    const std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
    if (!seen.insert(key).second) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
    }
    edges.push_back({key.first, key.second});
  }
  if (!p) throw ParseError(line_no, "missing 'p <count>' header");
  return Graph(*p, edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

}  // namespace glrank

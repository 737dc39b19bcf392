#include "tw/tree_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "tw/error.hpp"

namespace tw {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Tree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string trailing;
    if (n < 0) {
      if (!(fields >> n) || (fields >> trailing)) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected order n");
      }
      continue;
    }
    Edge e;
    if (!(fields >> e.u >> e.v) || (fields >> trailing)) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    edges.push_back(e);
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "empty input");
  return Tree::from_edges(n, edges);
}

Tree read_tree(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_tree(text);
}

Tree read_tree_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_tree(in);
}

std::string format_tree(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const Edge& e : t.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

void write_tree_file(const Tree& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << format_tree(t);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace tw

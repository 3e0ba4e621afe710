#include "severi/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace severi {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool parse_int(std::string_view token, int& value) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

LongEdgeGraph read_graph(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.front() == '#') continue;
    std::string_view rest(line);
    int fields[3];
    for (int i = 0; i < 3; ++i) {
      const std::size_t space = rest.find(' ');
      const std::string_view token = i < 2 ? rest.substr(0, space) : rest;
      if ((i < 2 && space == std::string_view::npos) || !parse_int(token, fields[i])) {
        throw ParseError(number, "expected \"start end weight\", got \"" + line + "\"");
      }
      if (i < 2) rest.remove_prefix(space + 1);
    }
    const Edge edge{fields[0], fields[1], fields[2]};
    try {
      const LongEdgeGraph single{edge};
    } catch (const GraphError& error) {
      throw ParseError(number, error.what());
    }
    edges.push_back(edge);
  }
  return LongEdgeGraph(std::move(edges));
}

LongEdgeGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

LongEdgeGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string format_graph(const LongEdgeGraph& graph) {
  std::ostringstream out;
  for (const Edge& edge : graph.edges()) {
    out << edge.start << ' ' << edge.end << ' ' << edge.weight << '\n';
  }
  return out.str();
}

}  // namespace severi

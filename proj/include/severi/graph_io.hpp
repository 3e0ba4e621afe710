#ifndef SEVERI_GRAPH_IO_HPP
#define SEVERI_GRAPH_IO_HPP

#include "severi/graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace severi {

// Raised for malformed graph text; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Edge text format: one edge per line as "start end weight" (decimal integers
// separated by single spaces). Lines starting with '#' and blank lines are
// skipped. An empty file is the empty graph.
LongEdgeGraph read_graph(std::istream& in);
LongEdgeGraph read_graph_file(const std::string& path);
LongEdgeGraph parse_graph(const std::string& text);

std::string format_graph(const LongEdgeGraph& graph);

}  // namespace severi

#endif  // SEVERI_GRAPH_IO_HPP

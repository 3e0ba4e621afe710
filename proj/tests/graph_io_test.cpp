#include "severi/graph_io.hpp"

#include <gtest/gtest.h>

namespace severi {
namespace {

TEST(GraphIo, ParsesEdgesAndComments) {
  const LongEdgeGraph g = parse_graph("# example\n3 5 1\n\n4 5 2\n4 6 1\n");
  EXPECT_EQ(g, (LongEdgeGraph{{3, 5, 1}, {4, 5, 2}, {4, 6, 1}}));
  EXPECT_TRUE(parse_graph("").empty());
  EXPECT_TRUE(parse_graph("# nothing\n").empty());
}

TEST(GraphIo, RoundTrip) {
  const LongEdgeGraph g{{0, 1, 2}, {0, 2, 1}, {0, 2, 1}, {3, 7, 3}};
  EXPECT_EQ(format_graph(g), "0 1 2\n0 2 1\n0 2 1\n3 7 3\n");
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

int error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& error) {
    return error.line();
  }
  return -1;
}

TEST(GraphIo, ReportsLineNumbers) {
  EXPECT_EQ(error_line("1 3 1\n2 x 1\n"), 2);
  EXPECT_EQ(error_line("# c\n1 3 1\n1  3 1\n"), 3);
  EXPECT_EQ(error_line("1 3\n"), 1);
  EXPECT_EQ(error_line("1 3 1 4\n"), 1);
  EXPECT_EQ(error_line("1 3 1\n\n2 3 1\n"), 3);  // short edge
  EXPECT_EQ(error_line("1 3 1\n3 1 1\n"), 2);
}

TEST(GraphIo, MissingFile) { EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), std::runtime_error); }

}  // namespace
}  // namespace severi

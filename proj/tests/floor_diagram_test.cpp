#include "severi/floor_diagram.hpp"

#include "severi/counting.hpp"
#include "severi/enumerator.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace severi {
namespace {

const LongEdgeGraph kGex{{3, 5, 1}, {4, 5, 2}, {4, 6, 1}};

bool no_edge_at(const LongEdgeGraph& g, int vertex) {
  return std::none_of(g.edges().begin(), g.edges().end(), [vertex](const Edge& e) { return e.end == vertex; });
}

TEST(FloorDiagram, Validation) {
  EXPECT_THROW(FloorDiagram(0, {}), FloorDiagramError);
  EXPECT_THROW(FloorDiagram(2, {{2, 1, 1}}), FloorDiagramError);
  EXPECT_THROW(FloorDiagram(2, {{1, 3, 1}}), FloorDiagramError);
  EXPECT_THROW(FloorDiagram(3, {{1, 2, 2}}), FloorDiagramError);
  EXPECT_NO_THROW(FloorDiagram(3, {{1, 2, 1}, {2, 3, 2}}));
}

TEST(FromLongEdge, Examples) {
  EXPECT_EQ(from_long_edge(LongEdgeGraph{}, 2), FloorDiagram(2, {{1, 2, 1}}));
  EXPECT_EQ(from_long_edge(LongEdgeGraph{{1, 3, 1}}, 2), FloorDiagram(2, {}));
  const FloorDiagram ex = from_long_edge(kGex, 5);
  std::vector<Edge> long_edges;
  for (const FloorEdge& e : ex.edges()) {
    if (!e.is_short()) long_edges.push_back({e.source, e.target, e.weight});
  }
  EXPECT_EQ(LongEdgeGraph(long_edges), (LongEdgeGraph{{3, 5, 1}, {4, 5, 2}}));
  EXPECT_THROW(from_long_edge(kGex, 4), FloorDiagramError);
}

TEST(ToLongEdge, Examples) {
  EXPECT_EQ(to_long_edge(FloorDiagram(2, {{1, 2, 1}})), LongEdgeGraph{});
  EXPECT_EQ(to_long_edge(FloorDiagram(3, {{1, 3, 1}, {2, 3, 1}})), (LongEdgeGraph{{1, 3, 1}}));
  EXPECT_EQ(to_long_edge(FloorDiagram(3, {{1, 2, 1}, {2, 3, 2}})), (LongEdgeGraph{{2, 3, 2}}));
  // Divergence 2 at floor 2.
  EXPECT_THROW(FloorDiagram(3, {{1, 3, 1}, {2, 3, 1}, {2, 3, 1}}), FloorDiagramError);
}

TEST(FloorDiagram, RoundTrip) {
  std::mt19937 rng(41);
  int tested = 0;
  while (tested < 100) {
    const LongEdgeGraph g = testing::random_graph(rng, 4, 8);
    const int d = std::uniform_int_distribution<int>(2, 9)(rng);
    if (!is_allowable(g, d) || !no_edge_at(g, d + 1)) continue;
    ++tested;
    const FloorDiagram diagram = from_long_edge(g, d);
    EXPECT_EQ(to_long_edge(diagram), g) << to_string(g);
    EXPECT_EQ(completed_long_edge(diagram), g) << to_string(g);
    EXPECT_EQ(fd_multiplicity(diagram), multiplicity(to_long_edge(diagram)));
  }
}

// Edges into d+1 come back from the divergence deficit.
TEST(FloorDiagram, CompletionRestoresSinkEdges) {
  for (int delta = 0; delta <= 3; ++delta) {
    for (int d = 1; d <= 6; ++d) {
      for_each_graph(delta, d, [d](const LongEdgeGraph& g) {
        EXPECT_EQ(completed_long_edge(from_long_edge(g, d)), g) << to_string(g) << " d " << d;
      });
    }
  }
}

TEST(FdCogenus, Examples) {
  EXPECT_EQ(fd_cogenus(FloorDiagram(1, {})), 0);
  EXPECT_EQ(fd_cogenus(FloorDiagram(2, {{1, 2, 1}})), 0);
  EXPECT_EQ(fd_cogenus(FloorDiagram(2, {})), 1);
}

TEST(FdCogenus, CompatibleWithLongEdge) {
  for (int delta = 0; delta <= 3; ++delta) {
    for (int d = 1; d <= 6; ++d) {
      for_each_graph(delta, d, [&](const LongEdgeGraph& g) {
        if (!no_edge_at(g, d + 1)) return;
        EXPECT_EQ(fd_cogenus(from_long_edge(g, d)), delta) << to_string(g) << " d " << d;
      });
    }
  }
}

TEST(MarkingCount, Examples) {
  EXPECT_EQ(marking_count(FloorDiagram(2, {{1, 2, 1}})), 1);
  const FloorDiagram c1 = from_long_edge(LongEdgeGraph{{1, 3, 1}}, 3);
  EXPECT_EQ(fd_multiplicity(c1) * marking_count(c1), 3);
  // Cyc[2] at d = 3 loses its edge into vertex 4.
  const FloorDiagram c2 = from_long_edge(LongEdgeGraph{{2, 4, 1}}, 3);
  EXPECT_EQ(marking_count(c2), 5);
}

TEST(Enumeration, Examples) {
  EXPECT_EQ(enumerate_floor_diagrams(1, 0).size(), 1u);
  const std::vector<FloorDiagram> d31 = enumerate_floor_diagrams(3, 1);
  ASSERT_EQ(d31.size(), 3u);
  std::vector<FloorDiagram> images;
  for (const LongEdgeGraph& g : enumerate_graphs(1, 3)) images.push_back(from_long_edge(g, 3));
  for (const FloorDiagram& diagram : d31) EXPECT_NE(std::find(images.begin(), images.end(), diagram), images.end());
  EXPECT_THROW(enumerate_floor_diagrams(6, 1), FloorGuardExceeded);
  EXPECT_THROW(enumerate_floor_diagrams(4, 4), FloorGuardExceeded);
}

TEST(Enumeration, Divergence) {
  for (int d = 1; d <= 5; ++d) {
    for (int delta = 0; delta <= 3; ++delta) {
      for (const FloorDiagram& diagram : enumerate_floor_diagrams(d, delta)) {
        for (int v = 1; v <= d; ++v) EXPECT_LE(diagram.divergence(v), 1);
        // After completion every floor has divergence 1 and the sink absorbs -d.
        const LongEdgeGraph completed = completed_long_edge(diagram);
        EXPECT_TRUE(is_allowable(completed, d));
        EXPECT_EQ(from_long_edge(completed, d), diagram);
        EXPECT_EQ(fd_cogenus(diagram), delta);
      }
    }
  }
}

TEST(FmCount, MatchesTemplateRoute) {
  EXPECT_EQ(fmcount(2, 1), 3);
  EXPECT_EQ(fmcount(3, 1), 12);
  EXPECT_EQ(fmcount(4, 1), 27);
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(fmcount(d, 0), 1);
  for (int d = 1; d <= 4; ++d) {
    for (int delta = 0; delta <= 2; ++delta) EXPECT_EQ(fmcount(d, delta), severi_degree(d, delta)) << d << " " << delta;
  }
  EXPECT_EQ(fmcount(4, 3), 675);
  EXPECT_EQ(fmcount(5, 3), severi_degree(5, 3));
}

TEST(DiagramIo, RoundTripAndErrors) {
  const FloorDiagram diagram(4, {{1, 3, 1}, {2, 4, 1}, {3, 4, 1}});
  EXPECT_EQ(parse_diagram(format_diagram(diagram)), diagram);
  EXPECT_EQ(parse_diagram("# c\nd=2\n\n1 2 1\n"), FloorDiagram(2, {{1, 2, 1}}));
  try {
    parse_diagram("d=3\n1 2 1\n1 3\n");
    ADD_FAILURE();
  } catch (const ParseError& error) {
    EXPECT_EQ(error.line(), 3);
  }
  EXPECT_THROW(parse_diagram("1 2 1\n"), ParseError);
  EXPECT_THROW(parse_diagram("d=x\n"), ParseError);
}

}  // namespace
}  // namespace severi

#ifndef SEVERI_FLOOR_DIAGRAM_HPP
#define SEVERI_FLOOR_DIAGRAM_HPP

#include "severi/big.hpp"
#include "severi/graph.hpp"
#include "severi/graph_io.hpp"

#include <compare>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace severi {

struct FloorEdge {
  int source = 1;
  int target = 2;
  int weight = 1;

  bool is_short() const { return weight == 1 && target - source == 1; }
  auto operator<=>(const FloorEdge&) const = default;
};

class FloorDiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weighted acyclic multigraph on floors 1..degree, edges pointing from a
// smaller to a larger floor, with divergence <= 1 at every floor. Short edges
// are stored explicitly. Edges are kept sorted.
class FloorDiagram {
 public:
  FloorDiagram(int degree, std::vector<FloorEdge> edges);

  int degree() const { return degree_; }
  const std::vector<FloorEdge>& edges() const { return edges_; }
  // Outgoing minus incoming weight.
  int divergence(int floor) const;

  bool operator==(const FloorDiagram&) const = default;

 private:
  int degree_;
  std::vector<FloorEdge> edges_;
};

// Adds i - w_i short edges over every gap i <= d, then erases vertex d+1 and
// everything incident to it. Throws FloorDiagramError unless G is allowable for d.
FloorDiagram from_long_edge(const LongEdgeGraph& graph, int d);

// Drops short edges. Edges G had at vertex d+1 are not recovered; see
// completed_long_edge for that.
LongEdgeGraph to_long_edge(const FloorDiagram& diagram);

// Restores 1 - div(v) weight-1 edges from each floor to a virtual floor d+1,
// then drops short edges. Inverse of from_long_edge.
LongEdgeGraph completed_long_edge(const FloorDiagram& diagram);

// Sum of component cogenera plus d_j d_j' over pairs of components; isolated
// floors are components of degree 1.
int fd_cogenus(const FloorDiagram& diagram);

// Product of squared weights over all edges.
Integer fd_multiplicity(const FloorDiagram& diagram);

// Equivalence classes of markings, counted as classes of orderings of the
// associated long-edge graph.
Integer marking_count(const FloorDiagram& diagram);

struct FloorLimits {
  int max_degree = 5;
  int max_cogenus = 3;
};

class FloorGuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Direct enumeration: every edge multiset on floors 1..d with crossing weight
// over [i, i+1] at most i, div <= 1 and cogenus delta. Sorted, duplicate-free.
std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int cogenus, const FloorLimits& limits = {});

// Sum of mu(D) nu(D) over enumerate_floor_diagrams(d, cogenus).
Integer fmcount(int d, int cogenus, const FloorLimits& limits = {});

// Diagram text format: a "d=<n>" header line, then "source target weight"
// lines. '#' lines and blank lines are skipped. Malformed text raises ParseError.
FloorDiagram read_diagram(std::istream& in);
FloorDiagram parse_diagram(const std::string& text);
std::string format_diagram(const FloorDiagram& diagram);

}  // namespace severi

#endif  // SEVERI_FLOOR_DIAGRAM_HPP

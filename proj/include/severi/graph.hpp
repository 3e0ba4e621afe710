#ifndef SEVERI_GRAPH_HPP
#define SEVERI_GRAPH_HPP

#include "severi/big.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace severi {

// A weighted edge drawn left to right on the vertex line 0, 1, 2, ...
struct Edge {
  int start = 0;
  int end = 0;
  int weight = 1;

  int length() const { return end - start; }
  // Contribution l(e) w(e) - 1 to the cogenus.
  int cogenus() const { return length() * weight - 1; }
  bool spans_gap(int gap) const { return start <= gap && gap < end; }

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { kNegativeVertex, kLoop, kReversed, kNonPositiveWeight, kShortEdge };

  GraphError(Kind kind, const Edge& edge);

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Total edge weight over each unit interval [i, i+1]; zero outside the span.
class WeightProfile {
 public:
  WeightProfile() = default;
  WeightProfile(int first_gap, std::vector<int> weights);

  int operator[](int gap) const;
  int first_gap() const { return first_gap_; }
  // One past the last gap that may be nonzero.
  int end_gap() const { return first_gap_ + static_cast<int>(weights_.size()); }
  bool operator==(const WeightProfile& other) const;

 private:
  int first_gap_ = 0;
  std::vector<int> weights_;
};

// Finite multiset of long edges, stored sorted by (start, end, weight). The
// position of an edge in edges() is its label for partition and
// distribution computations.
class LongEdgeGraph {
 public:
  LongEdgeGraph() = default;
  explicit LongEdgeGraph(std::vector<Edge> edges);
  LongEdgeGraph(std::initializer_list<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const Edge& operator[](std::size_t label) const { return edges_[label]; }

  // Smallest start vertex / largest end vertex. Both 0 for the empty graph.
  int left_end() const;
  int right_end() const;

  // Subgraph on the labels whose bits are set in mask. Labels stay in order.
  LongEdgeGraph subgraph(unsigned mask) const;

  bool operator==(const LongEdgeGraph&) const = default;
  auto operator<=>(const LongEdgeGraph&) const = default;

 private:
  std::vector<Edge> edges_;
};

// Gap index assigned to each labeled edge, indexed by label.
struct Distribution {
  std::vector<int> gaps;

  // Number of edges assigned to each gap, as (gap, count) pairs sorted by gap.
  std::vector<std::pair<int, int>> multiplicities() const;
  bool operator==(const Distribution&) const = default;
  auto operator<=>(const Distribution&) const = default;
};

struct OffsetTemplate {
  LongEdgeGraph shape;
  int offset = 0;

  bool operator==(const OffsetTemplate&) const = default;
};

LongEdgeGraph make_graph(std::span<const Edge> edges);

int cogenus(const LongEdgeGraph& graph);
Integer multiplicity(const LongEdgeGraph& graph);
WeightProfile weight_profile(const LongEdgeGraph& graph);

// Criteria: nothing past vertex d+1, weight 1 at vertex d+1, w_i <= i.
bool is_allowable(const LongEdgeGraph& graph, int d);
// Only the w_i <= i criterion.
bool satisfies_weight_bound(const LongEdgeGraph& graph);

LongEdgeGraph offset(const LongEdgeGraph& graph, int k);
Distribution offset(const Distribution& distribution, int k);

// Edges are unlabeled, vertices labeled: product of (group size)! over groups
// of identical edges. The distribution variant also splits groups by gap.
Integer automorphism_count(const LongEdgeGraph& graph);
Integer automorphism_count_with(const LongEdgeGraph& graph, const Distribution& distribution);

bool is_template(const LongEdgeGraph& graph);
bool is_offset_template(const LongEdgeGraph& graph);

// Unique split into offset templates, ordered left to right. Empty input
// gives an empty list.
std::vector<OffsetTemplate> decompose(const LongEdgeGraph& graph);

LongEdgeGraph disjoint_union(std::span<const LongEdgeGraph> parts);
LongEdgeGraph disjoint_union(const LongEdgeGraph& a, const LongEdgeGraph& b);
LongEdgeGraph reassemble(std::span<const OffsetTemplate> parts);

// Restriction of a distribution to the labels in mask.
Distribution restrict(const Distribution& distribution, unsigned mask);

std::string to_string(const LongEdgeGraph& graph);

}  // namespace severi

#endif  // SEVERI_GRAPH_HPP

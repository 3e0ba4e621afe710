#include "severi/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace severi {

namespace {

std::string describe(GraphError::Kind kind, const Edge& edge) {
  std::ostringstream out;
  out << "edge (" << edge.start << ", " << edge.end << ", " << edge.weight << "): ";
  switch (kind) {
    case GraphError::Kind::kNegativeVertex:
      out << "negative vertex index";
      break;
    case GraphError::Kind::kLoop:
      out << "loop (start equals end)";
      break;
    case GraphError::Kind::kReversed:
      out << "end precedes start";
      break;
    case GraphError::Kind::kNonPositiveWeight:
      out << "weight must be a positive integer";
      break;
    case GraphError::Kind::kShortEdge:
      out << "short edge (length 1, weight 1) is not allowed";
      break;
  }
  return out.str();
}

void validate(const Edge& edge) {
  using Kind = GraphError::Kind;
  if (edge.start < 0 || edge.end < 0) throw GraphError(Kind::kNegativeVertex, edge);
  if (edge.start == edge.end) throw GraphError(Kind::kLoop, edge);
  if (edge.end < edge.start) throw GraphError(Kind::kReversed, edge);
  if (edge.weight <= 0) throw GraphError(Kind::kNonPositiveWeight, edge);
  if (edge.length() == 1 && edge.weight == 1) throw GraphError(Kind::kShortEdge, edge);
}

}  // namespace

GraphError::GraphError(Kind kind, const Edge& edge)
    : std::invalid_argument(describe(kind, edge)), kind_(kind) {}

WeightProfile::WeightProfile(int first_gap, std::vector<int> weights)
    : first_gap_(first_gap), weights_(std::move(weights)) {
  while (!weights_.empty() && weights_.back() == 0) weights_.pop_back();
  std::size_t lead = 0;
  while (lead < weights_.size() && weights_[lead] == 0) ++lead;
  weights_.erase(weights_.begin(), weights_.begin() + static_cast<std::ptrdiff_t>(lead));
  first_gap_ = weights_.empty() ? 0 : first_gap_ + static_cast<int>(lead);
}

int WeightProfile::operator[](int gap) const {
  if (gap < first_gap_ || gap >= end_gap()) return 0;
  return weights_[static_cast<std::size_t>(gap - first_gap_)];
}

bool WeightProfile::operator==(const WeightProfile& other) const {
  return first_gap_ == other.first_gap_ && weights_ == other.weights_;
}

LongEdgeGraph::LongEdgeGraph(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& edge : edges_) validate(edge);
  std::sort(edges_.begin(), edges_.end());
}

LongEdgeGraph::LongEdgeGraph(std::initializer_list<Edge> edges)
    : LongEdgeGraph(std::vector<Edge>(edges)) {}

int LongEdgeGraph::left_end() const {
  return edges_.empty() ? 0 : edges_.front().start;
}

int LongEdgeGraph::right_end() const {
  int right = 0;
  for (const Edge& edge : edges_) right = std::max(right, edge.end);
  return right;
}

LongEdgeGraph LongEdgeGraph::subgraph(unsigned mask) const {
  LongEdgeGraph result;
  for (std::size_t label = 0; label < edges_.size(); ++label) {
    if (mask & (1u << label)) result.edges_.push_back(edges_[label]);
  }
  return result;
}

std::vector<std::pair<int, int>> Distribution::multiplicities() const {
  std::map<int, int> counts;
  for (int gap : gaps) ++counts[gap];
  return {counts.begin(), counts.end()};
}

LongEdgeGraph make_graph(std::span<const Edge> edges) {
  return LongEdgeGraph(std::vector<Edge>(edges.begin(), edges.end()));
}

int cogenus(const LongEdgeGraph& graph) {
  int total = 0;
  for (const Edge& edge : graph.edges()) total += edge.cogenus();
  return total;
}

Integer multiplicity(const LongEdgeGraph& graph) {
  Integer mu = 1;
  for (const Edge& edge : graph.edges()) mu *= edge.weight * edge.weight;
  return mu;
}

WeightProfile weight_profile(const LongEdgeGraph& graph) {
  if (graph.empty()) return {};
  const int first = graph.left_end();
  std::vector<int> weights(static_cast<std::size_t>(graph.right_end() - first), 0);
  for (const Edge& edge : graph.edges()) {
    for (int gap = edge.start; gap < edge.end; ++gap) {
      weights[static_cast<std::size_t>(gap - first)] += edge.weight;
    }
  }
  return WeightProfile(first, std::move(weights));
}

bool satisfies_weight_bound(const LongEdgeGraph& graph) {
  const WeightProfile profile = weight_profile(graph);
  for (int gap = profile.first_gap(); gap < profile.end_gap(); ++gap) {
    if (profile[gap] > gap) return false;
  }
  return true;
}

bool is_allowable(const LongEdgeGraph& graph, int d) {
  for (const Edge& edge : graph.edges()) {
    if (edge.end > d + 1) return false;
    if (edge.end == d + 1 && edge.weight != 1) return false;
  }
  return satisfies_weight_bound(graph);
}

LongEdgeGraph offset(const LongEdgeGraph& graph, int k) {
  std::vector<Edge> shifted = graph.edges();
  for (Edge& edge : shifted) {
    edge.start += k;
    edge.end += k;
  }
  return LongEdgeGraph(std::move(shifted));
}

Distribution offset(const Distribution& distribution, int k) {
  Distribution shifted = distribution;
  for (int& gap : shifted.gaps) gap += k;
  return shifted;
}

namespace {

template <typename Key>
Integer product_of_group_factorials(const std::vector<Key>& keys) {
  std::map<Key, unsigned> groups;
  for (const Key& key : keys) ++groups[key];
  Integer alpha = 1;
  for (const auto& [key, size] : groups) alpha *= factorial(size);
  return alpha;
}

}  // namespace

Integer automorphism_count(const LongEdgeGraph& graph) {
  return product_of_group_factorials(graph.edges());
}

Integer automorphism_count_with(const LongEdgeGraph& graph, const Distribution& distribution) {
  std::vector<std::pair<Edge, int>> keys;
  keys.reserve(graph.size());
  for (std::size_t label = 0; label < graph.size(); ++label) {
    keys.emplace_back(graph[label], distribution.gaps.at(label));
  }
  return product_of_group_factorials(keys);
}

bool is_template(const LongEdgeGraph& graph) {
  if (graph.empty() || graph.left_end() != 0) return false;
  const int right = graph.right_end();
  for (int vertex = 1; vertex < right; ++vertex) {
    const bool covered = std::any_of(graph.edges().begin(), graph.edges().end(), [vertex](const Edge& e) {
      return e.start < vertex && vertex < e.end;
    });
    if (!covered) return false;
  }
  return true;
}

bool is_offset_template(const LongEdgeGraph& graph) {
  return !graph.empty() && is_template(offset(graph, -graph.left_end()));
}

std::vector<OffsetTemplate> decompose(const LongEdgeGraph& graph) {
  std::vector<OffsetTemplate> parts;
  std::vector<Edge> current;
  int reach = 0;
  auto flush = [&] {
    if (current.empty()) return;
    const int base = current.front().start;
    for (Edge& edge : current) {
      edge.start -= base;
      edge.end -= base;
    }
    parts.push_back({LongEdgeGraph(std::move(current)), base});
    current.clear();
  };
  // Edges are sorted by start, so a start at or beyond the current reach
  // means the vertex `reach` is not covered.
  for (const Edge& edge : graph.edges()) {
    if (!current.empty() && edge.start >= reach) flush();
    if (current.empty()) reach = edge.end;
    current.push_back(edge);
    reach = std::max(reach, edge.end);
  }
  flush();
  return parts;
}

LongEdgeGraph disjoint_union(std::span<const LongEdgeGraph> parts) {
  std::vector<Edge> edges;
  for (const LongEdgeGraph& part : parts) {
    edges.insert(edges.end(), part.edges().begin(), part.edges().end());
  }
  return LongEdgeGraph(std::move(edges));
}

LongEdgeGraph disjoint_union(const LongEdgeGraph& a, const LongEdgeGraph& b) {
  const LongEdgeGraph parts[] = {a, b};
  return disjoint_union(parts);
}

LongEdgeGraph reassemble(std::span<const OffsetTemplate> parts) {
  std::vector<LongEdgeGraph> shifted;
  shifted.reserve(parts.size());
  for (const OffsetTemplate& part : parts) shifted.push_back(offset(part.shape, part.offset));
  return disjoint_union(shifted);
}

Distribution restrict(const Distribution& distribution, unsigned mask) {
  Distribution result;
  for (std::size_t label = 0; label < distribution.gaps.size(); ++label) {
    if (mask & (1u << label)) result.gaps.push_back(distribution.gaps[label]);
  }
  return result;
}

std::string to_string(const LongEdgeGraph& graph) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (i) out << ", ";
    out << '(' << graph[i].start << ',' << graph[i].end << ',' << graph[i].weight << ')';
  }
  out << '}';
  return out.str();
}

}  // namespace severi

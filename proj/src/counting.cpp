#include "severi/counting.hpp"

#include "severi/enumerator.hpp"
#include "severi/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>

namespace severi {

void invariant_violation(const std::string& message) {
  std::cerr << "internal invariant violated: " << message << std::endl;
  std::abort();
}

namespace {

void collect_distributions(const LongEdgeGraph& graph, std::size_t label, bool unlabeled,
                           Distribution& current, std::vector<Distribution>& out) {
  if (label == graph.size()) {
    out.push_back(current);
    return;
  }
  const Edge& edge = graph[label];
  int first = edge.start;
  if (unlabeled && label > 0 && graph[label - 1] == edge) first = current.gaps[label - 1];
  for (int gap = first; gap < edge.end; ++gap) {
    current.gaps.push_back(gap);
    collect_distributions(graph, label + 1, unlabeled, current, out);
    current.gaps.pop_back();
  }
}

}  // namespace

std::vector<Distribution> enumerate_distributions(const LongEdgeGraph& graph) {
  std::vector<Distribution> out;
  Distribution current;
  collect_distributions(graph, 0, false, current, out);
  return out;
}

std::vector<Distribution> enumerate_unlabeled_distributions(const LongEdgeGraph& graph) {
  std::vector<Distribution> out;
  Distribution current;
  collect_distributions(graph, 0, true, current, out);
  return out;
}

Integer n_star(const LongEdgeGraph& graph, const Distribution& distribution, int d) {
  if (distribution.gaps.size() != graph.size()) {
    throw std::invalid_argument("distribution does not match the graph's edge count");
  }
  if (!is_allowable(graph, d)) return 0;
  const WeightProfile profile = weight_profile(graph);
  Integer count = 1;
  for (const auto& [gap, midpoints] : distribution.multiplicities()) {
    // Gaps outside the graph's span have m_i = 0 and contribute a factor 1.
    const Integer free_slots = gap - profile[gap] + midpoints;
    count *= falling_factorial(free_slots, static_cast<unsigned>(midpoints));
  }
  return count;
}

Integer n_star_total(const LongEdgeGraph& graph, int d) {
  if (!is_allowable(graph, d)) return 0;
  Integer total = 0;
  for (const Distribution& distribution : enumerate_distributions(graph)) {
    total += n_star(graph, distribution, d);
  }
  return total;
}

Integer n_graph(const LongEdgeGraph& graph, int d) {
  const Integer labeled = multiplicity(graph) * n_star_total(graph, d);
  const Integer alpha = automorphism_count(graph);
  if (labeled % alpha != 0) {
    invariant_violation("alpha(G) = " + to_string(alpha) + " does not divide " + to_string(labeled) +
                        " for G = " + to_string(graph));
  }
  return labeled / alpha;
}

Integer n_graph_unlabeled(const LongEdgeGraph& graph, int d) {
  const Integer mu = multiplicity(graph);
  Integer total = 0;
  for (const Distribution& distribution : enumerate_unlabeled_distributions(graph)) {
    const Integer numerator = mu * n_star(graph, distribution, d);
    const Integer alpha = automorphism_count_with(graph, distribution);
    if (numerator % alpha != 0) {
      invariant_violation("alpha(G, Delta) does not divide mu * N_* for G = " + to_string(graph));
    }
    total += numerator / alpha;
  }
  return total;
}

Integer severi_degree(int d, int cogenus, int jobs) {
  if (jobs <= 1) {
    Integer total = 0;
    for_each_graph(cogenus, d, [&total, d](const LongEdgeGraph& graph) { total += n_graph(graph, d); });
    return total;
  }
  const std::vector<LongEdgeGraph> graphs = enumerate_graphs(cogenus, d);
  return parallel_sum<Integer>(graphs.size(), jobs, [&](std::size_t i) { return n_graph(graphs[i], d); });
}

namespace {

constexpr int kShortToken = -1;
constexpr int kGapSeparator = -2;

// All distinct arrangements of a multiset of tokens.
std::vector<std::vector<int>> arrangements(std::vector<int> tokens) {
  std::vector<std::vector<int>> result;
  std::sort(tokens.begin(), tokens.end());
  do {
    result.push_back(tokens);
  } while (std::next_permutation(tokens.begin(), tokens.end()));
  return result;
}

}  // namespace

Integer orderings_oracle(const LongEdgeGraph& graph, int d, const OracleOptions& options) {
  if (!is_allowable(graph, d)) return 0;
  if (graph.empty()) return 1;

  const int first_gap = graph.left_end();
  const int end_gap = graph.right_end();
  std::vector<int> short_edges;  // per gap in [first_gap, end_gap)
  int midpoints = static_cast<int>(graph.size());
  for (int gap = first_gap; gap < end_gap; ++gap) {
    int over = 0;
    for (const Edge& edge : graph.edges()) {
      if (edge.start <= gap && gap + 1 <= edge.end) over += edge.weight;
    }
    short_edges.push_back(gap - over);
    midpoints += gap - over;
  }
  if (midpoints > options.max_midpoints) {
    throw OracleTooLarge("oracle too large: " + std::to_string(midpoints) + " subdivision points in span, bound is " +
                         std::to_string(options.max_midpoints));
  }

  const std::size_t gap_count = short_edges.size();
  std::set<std::vector<int>> outcomes;
  std::vector<int> choice(graph.size());
  for (std::size_t label = 0; label < graph.size(); ++label) choice[label] = graph[label].start;

  while (true) {
    // Tokens in each gap for this placement of the long-edge midpoints.
    std::vector<std::vector<std::vector<int>>> per_gap(gap_count);
    for (std::size_t g = 0; g < gap_count; ++g) {
      std::vector<int> tokens(static_cast<std::size_t>(short_edges[g]), kShortToken);
      for (std::size_t label = 0; label < graph.size(); ++label) {
        if (choice[label] == first_gap + static_cast<int>(g)) tokens.push_back(static_cast<int>(label));
      }
      per_gap[g] = arrangements(std::move(tokens));
    }
    std::vector<std::size_t> pick(gap_count, 0);
    while (true) {
      std::vector<int> sequence;
      for (std::size_t g = 0; g < gap_count; ++g) {
        const std::vector<int>& part = per_gap[g][pick[g]];
        sequence.insert(sequence.end(), part.begin(), part.end());
        sequence.push_back(kGapSeparator);
      }
      outcomes.insert(std::move(sequence));
      std::size_t g = 0;
      while (g < gap_count && ++pick[g] == per_gap[g].size()) pick[g++] = 0;
      if (g == gap_count) break;
    }
    // Next placement: each midpoint strictly between its edge's endpoints.
    std::size_t label = 0;
    while (label < graph.size() && ++choice[label] == graph[label].end) {
      choice[label] = graph[label].start;
      ++label;
    }
    if (label == graph.size()) break;
  }
  return Integer(static_cast<unsigned long>(outcomes.size()));
}

}  // namespace severi

#ifndef SEVERI_TEST_SUPPORT_HPP
#define SEVERI_TEST_SUPPORT_HPP

#include "severi/graph.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace severi::testing {

// Long edges with start in [lo, hi), end <= hi, and l*w - 1 <= max_cogenus.
inline std::vector<Edge> edge_types(int lo, int hi, int max_cogenus) {
  std::vector<Edge> types;
  for (int s = lo; s < hi; ++s) {
    for (int e = s + 1; e <= hi; ++e) {
      for (int w = 1; (e - s) * w - 1 <= max_cogenus; ++w) {
        if (e - s == 1 && w == 1) continue;
        types.push_back({s, e, w});
      }
    }
  }
  return types;
}

// Every edge multiset over `types` with total cogenus exactly `cogenus`.
inline void for_each_multiset(const std::vector<Edge>& types, int cogenus,
                              const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<Edge> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      visit(chosen);
      return;
    }
    for (std::size_t j = i; j < types.size(); ++j) {
      if (types[j].cogenus() > left) continue;
      chosen.push_back(types[j]);
      rec(j, left - types[j].cogenus());
      chosen.pop_back();
    }
  };
  rec(0, cogenus);
}

// Generate-and-filter: all allowable graphs of the cogenus inside [0, d+1].
inline std::set<LongEdgeGraph> brute_force_graphs(int cogenus, int d) {
  std::set<LongEdgeGraph> found;
  for_each_multiset(edge_types(0, d + 1, cogenus), cogenus, [&](const std::vector<Edge>& edges) {
    LongEdgeGraph graph(edges);
    if (is_allowable(graph, d)) found.insert(std::move(graph));
  });
  return found;
}

// Left end 0 and every vertex strictly between the ends lies inside some edge.
inline bool covers_interior(const LongEdgeGraph& graph) {
  if (graph.empty() || graph.left_end() != 0) return false;
  for (int v = 1; v < graph.right_end(); ++v) {
    const bool covered = std::any_of(graph.edges().begin(), graph.edges().end(),
                                     [v](const Edge& e) { return e.start < v && v < e.end; });
    if (!covered) return false;
  }
  return true;
}

inline std::set<LongEdgeGraph> brute_force_templates(int cogenus) {
  std::set<LongEdgeGraph> found;
  for_each_multiset(edge_types(0, cogenus + 1, cogenus), cogenus, [&](const std::vector<Edge>& edges) {
    LongEdgeGraph graph(edges);
    if (covers_interior(graph)) found.insert(std::move(graph));
  });
  return found;
}

// Random graph with total cogenus at most max_cogenus, edges inside [0, span].
inline LongEdgeGraph random_graph(std::mt19937& rng, int max_cogenus, int span) {
  std::vector<Edge> types = edge_types(0, span, max_cogenus);
  std::vector<Edge> edges;
  int budget = std::uniform_int_distribution<int>(0, max_cogenus)(rng);
  for (int attempt = 0; attempt < 20 && budget > 0; ++attempt) {
    const Edge& e = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
    if (e.cogenus() > budget) continue;
    edges.push_back(e);
    budget -= e.cogenus();
  }
  return LongEdgeGraph(edges);
}

}  // namespace severi::testing

#endif  // SEVERI_TEST_SUPPORT_HPP

#include "severi/floor_diagram.hpp"

#include "severi/counting.hpp"
#include "severi/graph_io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace severi {

FloorDiagram::FloorDiagram(int degree, std::vector<FloorEdge> edges) : degree_(degree), edges_(std::move(edges)) {
  if (degree < 1) throw FloorDiagramError("floor diagram degree must be at least 1");
  for (const FloorEdge& edge : edges_) {
    if (edge.source < 1 || edge.target > degree || edge.source >= edge.target) {
      throw FloorDiagramError("edge " + std::to_string(edge.source) + "->" + std::to_string(edge.target) +
                              " must satisfy 1 <= source < target <= " + std::to_string(degree));
    }
    if (edge.weight < 1) throw FloorDiagramError("edge weights must be positive");
  }
  std::sort(edges_.begin(), edges_.end());
  for (int floor = 1; floor <= degree; ++floor) {
    if (divergence(floor) > 1) {
      throw FloorDiagramError("divergence " + std::to_string(divergence(floor)) + " at floor " +
                              std::to_string(floor) + " exceeds 1");
    }
  }
}

int FloorDiagram::divergence(int floor) const {
  int div = 0;
  for (const FloorEdge& edge : edges_) {
    if (edge.source == floor) div += edge.weight;
    if (edge.target == floor) div -= edge.weight;
  }
  return div;
}

FloorDiagram from_long_edge(const LongEdgeGraph& graph, int d) {
  if (!is_allowable(graph, d)) {
    throw FloorDiagramError("graph " + to_string(graph) + " is not allowable for d = " + std::to_string(d));
  }
  std::vector<FloorEdge> edges;
  for (const Edge& edge : graph.edges()) {
    if (edge.end <= d) edges.push_back({edge.start, edge.end, edge.weight});
  }
  const WeightProfile profile = weight_profile(graph);
  // Gap d ends at the erased vertex d+1.
  for (int gap = 1; gap < d; ++gap) {
    for (int i = profile[gap]; i < gap; ++i) edges.push_back({gap, gap + 1, 1});
  }
  return FloorDiagram(d, std::move(edges));
}

LongEdgeGraph to_long_edge(const FloorDiagram& diagram) {
  std::vector<Edge> edges;
  for (const FloorEdge& edge : diagram.edges()) {
    if (!edge.is_short()) edges.push_back({edge.source, edge.target, edge.weight});
  }
  return LongEdgeGraph(std::move(edges));
}

LongEdgeGraph completed_long_edge(const FloorDiagram& diagram) {
  std::vector<Edge> edges = to_long_edge(diagram).edges();
  const int sink = diagram.degree() + 1;
  for (int floor = 1; floor <= diagram.degree(); ++floor) {
    const int missing = 1 - diagram.divergence(floor);
    // Edges from floor d to the sink are short.
    if (floor + 1 == sink) continue;
    for (int i = 0; i < missing; ++i) edges.push_back({floor, sink, 1});
  }
  return LongEdgeGraph(std::move(edges));
}

int fd_cogenus(const FloorDiagram& diagram) {
  const int d = diagram.degree();
  std::vector<int> parent(static_cast<std::size_t>(d + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const FloorEdge& edge : diagram.edges()) parent[static_cast<std::size_t>(find(edge.source))] = find(edge.target);

  std::vector<int> vertices(static_cast<std::size_t>(d + 1), 0);
  std::vector<int> edge_counts(static_cast<std::size_t>(d + 1), 0);
  for (int v = 1; v <= d; ++v) ++vertices[static_cast<std::size_t>(find(v))];
  for (const FloorEdge& edge : diagram.edges()) ++edge_counts[static_cast<std::size_t>(find(edge.source))];

  int total = 0;
  std::vector<int> component_degrees;
  for (int root = 1; root <= d; ++root) {
    const int dj = vertices[static_cast<std::size_t>(root)];
    if (dj == 0) continue;
    const int genus = edge_counts[static_cast<std::size_t>(root)] - dj + 1;
    const int component_cogenus = (dj - 1) * (dj - 2) / 2 - genus;
    if (component_cogenus < 0) {
      throw FloorDiagramError("component of degree " + std::to_string(dj) + " has genus " + std::to_string(genus) +
                              ", more than a plane curve of that degree allows");
    }
    total += component_cogenus;
    component_degrees.push_back(dj);
  }
  for (std::size_t j = 0; j < component_degrees.size(); ++j) {
    for (std::size_t k = j + 1; k < component_degrees.size(); ++k) total += component_degrees[j] * component_degrees[k];
  }
  return total;
}

Integer fd_multiplicity(const FloorDiagram& diagram) {
  Integer mu = 1;
  for (const FloorEdge& edge : diagram.edges()) mu *= edge.weight * edge.weight;
  return mu;
}

Integer marking_count(const FloorDiagram& diagram) {
  const LongEdgeGraph graph = completed_long_edge(diagram);
  const Integer labeled = n_star_total(graph, diagram.degree());
  const Integer alpha = automorphism_count(graph);
  if (labeled % alpha != 0) invariant_violation("alpha does not divide the ordering count of " + to_string(graph));
  return labeled / alpha;
}

namespace {

struct DiagramSearch {
  int d;
  int target_cogenus;
  int edge_budget;  // total edge count is d(d-1)/2 - cogenus
  std::vector<FloorEdge> types;
  std::vector<int> capacity;  // remaining crossing weight per gap
  std::vector<FloorEdge> chosen;
  std::vector<FloorDiagram> found;

  void run(std::size_t next) {
    if (next == types.size()) {
      if (static_cast<int>(chosen.size()) != edge_budget) return;
      for (int floor = 1; floor <= d; ++floor) {
        int div = 0;
        for (const FloorEdge& edge : chosen) {
          if (edge.source == floor) div += edge.weight;
          if (edge.target == floor) div -= edge.weight;
        }
        if (div > 1) return;
      }
      FloorDiagram diagram(d, chosen);
      if (fd_cogenus(diagram) == target_cogenus) found.push_back(std::move(diagram));
      return;
    }
    const FloorEdge& type = types[next];
    const std::size_t mark = chosen.size();
    run(next + 1);
    while (static_cast<int>(chosen.size()) < edge_budget && fits(type)) {
      take(type, -1);
      chosen.push_back(type);
      run(next + 1);
    }
    while (chosen.size() > mark) {
      take(chosen.back(), +1);
      chosen.pop_back();
    }
  }

  bool fits(const FloorEdge& edge) const {
    for (int gap = edge.source; gap < edge.target; ++gap) {
      if (capacity[static_cast<std::size_t>(gap)] < edge.weight) return false;
    }
    return true;
  }

  void take(const FloorEdge& edge, int sign) {
    for (int gap = edge.source; gap < edge.target; ++gap) capacity[static_cast<std::size_t>(gap)] += sign * edge.weight;
  }
};

}  // namespace

std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int cogenus, const FloorLimits& limits) {
  if (d < 1 || cogenus < 0) throw std::invalid_argument("need d >= 1 and cogenus >= 0");
  if (d > limits.max_degree || cogenus > limits.max_cogenus) {
    throw FloorGuardExceeded("floor diagram enumeration is limited to d <= " + std::to_string(limits.max_degree) +
                             " and delta <= " + std::to_string(limits.max_cogenus));
  }
  DiagramSearch search{d, cogenus, d * (d - 1) / 2 - cogenus, {}, {}, {}, {}};
  if (search.edge_budget < 0) return {};
  search.capacity.assign(static_cast<std::size_t>(d + 1), 0);
  for (int gap = 1; gap < d; ++gap) search.capacity[static_cast<std::size_t>(gap)] = gap;
  for (int source = 1; source <= d; ++source) {
    for (int target = source + 1; target <= d; ++target) {
      for (int weight = 1; weight <= source; ++weight) search.types.push_back({source, target, weight});
    }
  }
  search.run(0);
  std::sort(search.found.begin(), search.found.end(),
            [](const FloorDiagram& a, const FloorDiagram& b) { return a.edges() < b.edges(); });
  return search.found;
}

Integer fmcount(int d, int cogenus, const FloorLimits& limits) {
  Integer total = 0;
  for (const FloorDiagram& diagram : enumerate_floor_diagrams(d, cogenus, limits)) {
    total += fd_multiplicity(diagram) * marking_count(diagram);
  }
  return total;
}

FloorDiagram read_diagram(std::istream& in) {
  std::string line;
  int number = 0;
  int degree = 0;
  bool have_header = false;
  std::vector<FloorEdge> edges;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      if (line.rfind("d=", 0) != 0) throw ParseError(number, "expected header \"d=<n>\", got \"" + line + "\"");
      try {
        std::size_t used = 0;
        degree = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw ParseError(number, "malformed degree in \"" + line + "\"");
      }
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    FloorEdge edge;
    std::string extra;
    if (!(fields >> edge.source >> edge.target >> edge.weight) || (fields >> extra)) {
      throw ParseError(number, "expected \"source target weight\", got \"" + line + "\"");
    }
    edges.push_back(edge);
  }
  if (!have_header) throw ParseError(number, "missing \"d=<n>\" header");
  return FloorDiagram(degree, std::move(edges));
}

FloorDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  return read_diagram(in);
}

std::string format_diagram(const FloorDiagram& diagram) {
  std::ostringstream out;
  out << "d=" << diagram.degree() << '\n';
  for (const FloorEdge& edge : diagram.edges()) out << edge.source << ' ' << edge.target << ' ' << edge.weight << '\n';
  return out.str();
}

}  // namespace severi

#include "severi/qcalc.hpp"

#include "severi/counting.hpp"
#include "severi/enumerator.hpp"
#include "severi/parallel.hpp"
#include "severi/partitions.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace severi {

namespace {

void check_edge_count(const LongEdgeGraph& graph) {
  if (graph.size() > static_cast<std::size_t>(kMaxPartitionEdges)) {
    throw std::invalid_argument("partition sums are limited to " + std::to_string(kMaxPartitionEdges) + " edges, got " +
                                std::to_string(graph.size()));
  }
}

// (-1)^{p-1} (p-1)!
Integer partition_sign_weight(int blocks) {
  Integer weight = factorial(static_cast<unsigned>(blocks - 1));
  return blocks % 2 == 0 ? Integer(-weight) : weight;
}

// sum_P (-1)^{p-1}(p-1)! prod_{E in P} block_value[mask(E)]
template <typename T>
T alternating_partition_sum(int n, const std::vector<T>& block_value) {
  T total = 0;
  for (const std::vector<unsigned>& partition : partition_masks(n)) {
    T term = partition_sign_weight(static_cast<int>(partition.size()));
    for (unsigned mask : partition) {
      term *= block_value[mask];
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

}  // namespace

Integer q_star(const LongEdgeGraph& graph, const Distribution& distribution, int d) {
  check_edge_count(graph);
  if (distribution.gaps.size() != graph.size()) {
    throw std::invalid_argument("distribution does not match the graph's edge count");
  }
  const int n = static_cast<int>(graph.size());
  if (n == 0) return 0;
  const unsigned full = (1u << n) - 1;
  std::vector<Integer> block_value(full + 1, 0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    block_value[mask] = n_star(graph.subgraph(mask), restrict(distribution, mask), d);
  }
  return alternating_partition_sum(n, block_value);
}

Rational q_graph(const LongEdgeGraph& graph, int d) {
  check_edge_count(graph);
  if (graph.empty()) return 0;
  Integer total = 0;
  for (const Distribution& distribution : enumerate_distributions(graph)) total += q_star(graph, distribution, d);
  Rational value(multiplicity(graph) * total, automorphism_count(graph));
  value.canonicalize();
  return value;
}

Rational q_graph_unlabeled(const LongEdgeGraph& graph, int d) {
  check_edge_count(graph);
  if (graph.empty()) return 0;
  const Integer mu = multiplicity(graph);
  Rational total = 0;
  for (const Distribution& distribution : enumerate_unlabeled_distributions(graph)) {
    Rational term(mu * q_star(graph, distribution, d), automorphism_count_with(graph, distribution));
    term.canonicalize();
    total += term;
  }
  return total;
}

Rational q_graph_by_blocks(const LongEdgeGraph& graph, int d) {
  check_edge_count(graph);
  const int n = static_cast<int>(graph.size());
  if (n == 0) return 0;
  const unsigned full = (1u << n) - 1;
  std::vector<Integer> block_value(full + 1, 0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    const LongEdgeGraph block = graph.subgraph(mask);
    block_value[mask] = automorphism_count(block) * n_graph(block, d);
  }
  Rational value(alternating_partition_sum(n, block_value), automorphism_count(graph));
  value.canonicalize();
  return value;
}

Rational q_delta_templates(int d, int cogenus, int jobs) {
  if (cogenus < 1) throw std::invalid_argument("q_delta_templates needs cogenus >= 1");
  const std::vector<LongEdgeGraph>& templates = template_catalog(cogenus).templates;
  // Offsets past d+1 - (right end) put an edge beyond d+1 in every block of
  // every partition, so 0..d+1 covers all nonzero terms.
  const std::size_t offsets = static_cast<std::size_t>(d + 2);
  return parallel_sum<Rational>(templates.size() * offsets, jobs, [&](std::size_t i) {
    return q_graph(offset(templates[i / offsets], static_cast<int>(i % offsets)), d);
  });
}

Rational q_delta_log(int d, int cogenus, int jobs) {
  if (cogenus < 1) throw std::invalid_argument("q_delta_log needs cogenus >= 1");
  std::vector<Rational> series;
  for (int j = 0; j <= cogenus; ++j) series.emplace_back(severi_degree(d, j, jobs));
  return series_log(series)[static_cast<std::size_t>(cogenus)];
}

namespace {

// Sum over compositions of `remaining` of (1/p!) prod Q, accumulated with the
// running part count.
void exp_compositions(std::span<const Rational> q, int remaining, int parts, const Rational& product,
                      Rational& total) {
  if (remaining == 0) {
    total += product / Rational(factorial(static_cast<unsigned>(parts)));
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    exp_compositions(q, remaining - part, parts + 1, product * q[static_cast<std::size_t>(part)], total);
  }
}

}  // namespace

Integer exp_recover_n(int d, int cogenus, std::span<const Rational> q_values) {
  if (cogenus < 0) throw std::invalid_argument("cogenus must be nonnegative");
  if (q_values.size() < static_cast<std::size_t>(cogenus) + 1) {
    throw std::invalid_argument("Q table must cover cogenus 1.." + std::to_string(cogenus));
  }
  Rational total = 0;
  exp_compositions(q_values, cogenus, 0, Rational(1), total);
  total.canonicalize();
  if (!is_integer(total)) {
    throw std::domain_error("exp of the Q table is not an integer at d = " + std::to_string(d) +
                            ", delta = " + std::to_string(cogenus) + ": " + to_string(total));
  }
  return total.get_num();
}

SimpleGraphH::SimpleGraphH(int vertices, std::vector<std::pair<int, int>> edges) : vertices_(vertices) {
  if (vertices < 1) throw std::invalid_argument("auxiliary graph needs at least one vertex");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool SimpleGraphH::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.first == e.second; });
}

namespace {

void check_vertex_count(const SimpleGraphH& graph) {
  if (graph.vertices() > kMaxPartitionSize) throw PartitionGuardExceeded(graph.vertices());
}

}  // namespace

Integer sigma(const SimpleGraphH& graph) {
  check_vertex_count(graph);
  if (graph.has_loop()) return 0;
  Integer total = 0;
  for (const std::vector<unsigned>& partition : partition_masks(graph.vertices())) {
    const bool compatible = std::none_of(partition.begin(), partition.end(), [&graph](unsigned mask) {
      return std::any_of(graph.edges().begin(), graph.edges().end(), [mask](const auto& e) {
        return (mask >> e.first & 1u) && (mask >> e.second & 1u);
      });
    });
    if (compatible) total += partition_sign_weight(static_cast<int>(partition.size()));
  }
  return total;
}

namespace {

using Adjacency = std::vector<unsigned>;

class ChromaticSolver {
 public:
  RationalPolynomial solve(const Adjacency& adjacency) {
    auto found = memo_.find(adjacency);
    if (found != memo_.end()) return found->second;
    RationalPolynomial result = compute(adjacency);
    memo_.emplace(adjacency, result);
    return result;
  }

 private:
  RationalPolynomial compute(const Adjacency& adjacency) {
    const std::size_t n = adjacency.size();
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (!(adjacency[u] >> v & 1u)) continue;
        // C_H = C_{H - e} - C_{H / e}
        Adjacency deleted = adjacency;
        deleted[u] &= ~(1u << v);
        deleted[v] &= ~(1u << u);
        return solve(deleted) - solve(contract(adjacency, u, v));
      }
    }
    std::vector<Rational> power(n + 1, 0);
    power[n] = 1;
    return RationalPolynomial(std::move(power));
  }

  // Merges v into u and drops v; the u-v edge disappears, parallel edges merge.
  static Adjacency contract(const Adjacency& adjacency, std::size_t u, std::size_t v) {
    const std::size_t n = adjacency.size();
    auto remap = [v](unsigned mask) {
      const unsigned low = mask & ((1u << v) - 1);
      const unsigned high = (mask >> (v + 1)) << v;
      return low | high;
    };
    Adjacency merged;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v) continue;
      unsigned mask = adjacency[w];
      if (w == u) mask |= adjacency[v];
      if (mask >> v & 1u) mask = (mask & ~(1u << v)) | (1u << u);
      mask &= ~(1u << w);
      merged.push_back(remap(mask));
    }
    // Self bit for u was cleared before remapping; re-clear after the shift.
    const std::size_t new_u = u < v ? u : u - 1;
    merged[new_u] &= ~(1u << new_u);
    return merged;
  }

  std::map<Adjacency, RationalPolynomial> memo_;
};

}  // namespace

RationalPolynomial chromatic_polynomial(const SimpleGraphH& graph) {
  check_vertex_count(graph);
  if (graph.has_loop()) return {};
  Adjacency adjacency(static_cast<std::size_t>(graph.vertices()), 0);
  for (auto [u, v] : graph.edges()) {
    adjacency[static_cast<std::size_t>(u)] |= 1u << v;
    adjacency[static_cast<std::size_t>(v)] |= 1u << u;
  }
  ChromaticSolver solver;
  return solver.solve(adjacency);
}

Integer chromatic_derivative_at_zero(const SimpleGraphH& graph) {
  return chromatic_polynomial(graph).coefficient(1).get_num();
}

Integer pair_identity(int a, int b) {
  if (a < 1 || b < 1 || a > 20 || b > 20) throw std::invalid_argument("pair_identity needs 1 <= a, b <= 20");
  Integer total = 0;
  for (int q = 0; q <= std::min(a, b); ++q) {
    const int blocks = a + b - q;
    const Integer term = partition_sign_weight(blocks) * binomial(static_cast<unsigned>(a), static_cast<unsigned>(q)) *
                         binomial(static_cast<unsigned>(b), static_cast<unsigned>(q)) *
                         factorial(static_cast<unsigned>(q));
    total += term;
  }
  return total;
}

}  // namespace severi

#ifndef SEVERI_QCALC_HPP
#define SEVERI_QCALC_HPP

#include "severi/big.hpp"
#include "severi/graph.hpp"
#include "severi/polynomial.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace severi {

// Largest edge count accepted by the partition sums below.
constexpr int kMaxPartitionEdges = 12;

// Alternating sum over set partitions P of the labeled edges:
//   sum_P (-1)^{p-1} (p-1)! prod_{E in P} n_star(E, Delta|E, d)
Integer q_star(const LongEdgeGraph& graph, const Distribution& distribution, int d);

// mu(G)/alpha(G) times the sum of q_star over labeled distributions.
Rational q_graph(const LongEdgeGraph& graph, int d);

// The same value summed over unlabeled distributions weighted by
// mu(G)/alpha(G, Delta).
Rational q_graph_unlabeled(const LongEdgeGraph& graph, int d);

// The same value from the block form
//   1/alpha(G) sum_P (-1)^{p-1} (p-1)! prod_{E in P} alpha(E) N^{d,E}.
Rational q_graph_by_blocks(const LongEdgeGraph& graph, int d);

// Q^{d,delta} as the sum of q_graph over every template of the given cogenus
// at every offset 0..d+1, allowable or not.
Rational q_delta_templates(int d, int cogenus, int jobs = 1);

// Q^{d,delta} as the coefficient of the formal logarithm of sum_j N^{d,j} x^j.
Rational q_delta_log(int d, int cogenus, int jobs = 1);

// N^{d,delta} from Q^{d,1..delta} via the ordered-partition expansion of exp.
// q_values[j] holds Q^{d,j}; entry 0 is ignored. Throws std::domain_error when
// the result is not an integer.
Integer exp_recover_n(int d, int cogenus, std::span<const Rational> q_values);

// Simple graph with optional loops; parallel edges are merged.
class SimpleGraphH {
 public:
  SimpleGraphH(int vertices, std::vector<std::pair<int, int>> edges);

  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_loop() const;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;  // u <= v, sorted, unique
};

// sum over vertex partitions with no block containing two adjacent vertices
// of (-1)^{p-1} (p-1)!. Any loop makes the sum empty.
Integer sigma(const SimpleGraphH& graph);

// Chromatic polynomial by deletion-contraction; zero when there is a loop.
RationalPolynomial chromatic_polynomial(const SimpleGraphH& graph);
Integer chromatic_derivative_at_zero(const SimpleGraphH& graph);

// sum_{q=0}^{min(a,b)} (-1)^{a+b-q-1} (a+b-q-1)! C(a,q) C(b,q) q!
Integer pair_identity(int a, int b);

}  // namespace severi

#endif  // SEVERI_QCALC_HPP

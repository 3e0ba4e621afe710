#ifndef SEVERI_COUNTING_HPP
#define SEVERI_COUNTING_HPP

#include "severi/big.hpp"
#include "severi/graph.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace severi {

// Every labeled distribution: each edge independently takes any gap it spans.
// Size is the product of edge lengths. The empty graph has one (empty) distribution.
std::vector<Distribution> enumerate_distributions(const LongEdgeGraph& graph);

// One representative per orbit of labeled distributions under permutations
// of identical edges (gaps nondecreasing within each identical group).
std::vector<Distribution> enumerate_unlabeled_distributions(const LongEdgeGraph& graph);

// Labeled orderings consistent with the distribution:
//   prod_i (i - w_i + m_i)_{m_i}
// and 0 when the graph is not allowable for d.
Integer n_star(const LongEdgeGraph& graph, const Distribution& distribution, int d);

// Sum of n_star over labeled distributions (all labeled orderings).
Integer n_star_total(const LongEdgeGraph& graph, int d);

// mu(G) / alpha(G) * n_star_total. Aborts if the division is not exact.
Integer n_graph(const LongEdgeGraph& graph, int d);

// Same quantity summed over unlabeled distributions with mu / alpha(G, Delta).
Integer n_graph_unlabeled(const LongEdgeGraph& graph, int d);

// Severi degree N^{d,delta}: sum of n_graph over allowable graphs of the
// given cogenus. jobs > 1 splits the sum across threads.
Integer severi_degree(int d, int cogenus, int jobs = 1);

class OracleTooLarge : public std::runtime_error {
 public:
  explicit OracleTooLarge(const std::string& message) : std::runtime_error(message) {}
};

struct OracleOptions {
  // Upper bound on subdivision points (long and short) inside the graph's span.
  int max_midpoints = 12;
};

// Brute-force N_*^{d,G}: builds the extended graph, places a labeled midpoint
// per long edge and an anonymous one per short edge, enumerates every
// arrangement and counts distinct ones.
Integer orderings_oracle(const LongEdgeGraph& graph, int d, const OracleOptions& options = {});

// Aborts with a diagnostic. Used where an exact division must never fail.
[[noreturn]] void invariant_violation(const std::string& message);

}  // namespace severi

#endif  // SEVERI_COUNTING_HPP

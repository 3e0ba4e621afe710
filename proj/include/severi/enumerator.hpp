#ifndef SEVERI_ENUMERATOR_HPP
#define SEVERI_ENUMERATOR_HPP

#include "severi/graph.hpp"

#include <functional>
#include <vector>

namespace severi {

struct TemplateCatalog {
  int cogenus = 0;
  std::vector<LongEdgeGraph> templates;  // sorted, duplicate-free
};

// Every template of the given cogenus. Templates fit in [0, cogenus + 1]
// since each edge covers at most l(e) - 1 <= l(e) w(e) - 1 internal vertices.
TemplateCatalog enumerate_templates(int cogenus);

// Cached, thread-safe access to enumerate_templates.
const TemplateCatalog& template_catalog(int cogenus);

// Closed integer interval; empty when lo > hi.
struct OffsetRange {
  int lo = 0;
  int hi = -1;

  bool empty() const { return lo > hi; }
  int size() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int k) const { return lo <= k && k <= hi; }
  bool operator==(const OffsetRange&) const = default;
};

// Smallest k with w_i(shape[k]) <= i everywhere, i.e. max_i (w_i - i).
int min_allowable_offset(const LongEdgeGraph& shape);

// All k for which shape[k] is allowable for d.
OffsetRange allowable_offsets(const LongEdgeGraph& shape, int d);

using GraphVisitor = std::function<void(const LongEdgeGraph&)>;

// Streams every long-edge graph of the given cogenus that is allowable for d,
// built as left-to-right sequences of offset templates. Deterministic order.
void for_each_graph(int cogenus, int d, const GraphVisitor& visit);

std::vector<LongEdgeGraph> enumerate_graphs(int cogenus, int d);

}  // namespace severi

#endif  // SEVERI_ENUMERATOR_HPP

#include "severi/enumerator.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace severi {

namespace {

// Candidate edges inside the template bounding box, sorted by (start, end, weight).
std::vector<Edge> template_edge_types(int cogenus) {
  std::vector<Edge> types;
  const int box = cogenus + 1;
  for (int start = 0; start < box; ++start) {
    for (int end = start + 1; end <= box; ++end) {
      for (int weight = 1; (end - start) * weight - 1 <= cogenus; ++weight) {
        const Edge edge{start, end, weight};
        if (edge.cogenus() >= 1) types.push_back(edge);
      }
    }
  }
  return types;
}

void collect_multisets(const std::vector<Edge>& types, std::size_t next, int remaining,
                       std::vector<Edge>& chosen, std::vector<LongEdgeGraph>& out) {
  if (remaining == 0) {
    LongEdgeGraph graph(chosen);
    if (is_template(graph)) out.push_back(std::move(graph));
    return;
  }
  for (std::size_t i = next; i < types.size(); ++i) {
    // The smallest chosen edge must start at vertex 0.
    if (chosen.empty() && types[i].start != 0) break;
    const int cost = types[i].cogenus();
    if (cost > remaining) continue;
    chosen.push_back(types[i]);
    collect_multisets(types, i, remaining - cost, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

TemplateCatalog enumerate_templates(int cogenus) {
  if (cogenus < 0) throw std::invalid_argument("cogenus must be nonnegative");
  TemplateCatalog catalog{cogenus, {}};
  if (cogenus == 0) return catalog;
  const std::vector<Edge> types = template_edge_types(cogenus);
  std::vector<Edge> chosen;
  collect_multisets(types, 0, cogenus, chosen, catalog.templates);
  std::sort(catalog.templates.begin(), catalog.templates.end());
  catalog.templates.erase(std::unique(catalog.templates.begin(), catalog.templates.end()),
                          catalog.templates.end());
  return catalog;
}

const TemplateCatalog& template_catalog(int cogenus) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TemplateCatalog>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[cogenus];
  if (!slot) slot = std::make_unique<TemplateCatalog>(enumerate_templates(cogenus));
  return *slot;
}

int min_allowable_offset(const LongEdgeGraph& shape) {
  const WeightProfile profile = weight_profile(shape);
  int k = 0;
  for (int gap = profile.first_gap(); gap < profile.end_gap(); ++gap) {
    k = std::max(k, profile[gap] - gap);
  }
  return k;
}

OffsetRange allowable_offsets(const LongEdgeGraph& shape, int d) {
  const int right = shape.right_end();
  int hi = d + 1 - right;
  const bool heavy_at_right = std::any_of(shape.edges().begin(), shape.edges().end(), [right](const Edge& e) {
    return e.end == right && e.weight >= 2;
  });
  if (heavy_at_right) --hi;
  return {min_allowable_offset(shape), hi};
}

namespace {

struct GraphStream {
  int d;
  const GraphVisitor& visit;
  std::vector<Edge> edges;

  // Places the next template at an offset >= min_offset, using up `remaining` cogenus.
  void extend(int remaining, int min_offset) {
    if (remaining == 0) {
      visit(LongEdgeGraph(edges));
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      for (const LongEdgeGraph& shape : template_catalog(part).templates) {
        const OffsetRange range = allowable_offsets(shape, d);
        const int right = shape.right_end();
        for (int k = std::max(range.lo, min_offset); k <= range.hi; ++k) {
          const std::size_t mark = edges.size();
          for (Edge edge : shape.edges()) {
            edge.start += k;
            edge.end += k;
            edges.push_back(edge);
          }
          extend(remaining - part, k + right);
          edges.resize(mark);
        }
      }
    }
  }
};

}  // namespace

void for_each_graph(int cogenus, int d, const GraphVisitor& visit) {
  if (cogenus < 0) throw std::invalid_argument("cogenus must be nonnegative");
  if (d < 1) throw std::invalid_argument("degree d must be at least 1");
  GraphStream stream{d, visit, {}};
  stream.extend(cogenus, 0);
}

std::vector<LongEdgeGraph> enumerate_graphs(int cogenus, int d) {
  std::vector<LongEdgeGraph> graphs;
  for_each_graph(cogenus, d, [&graphs](const LongEdgeGraph& graph) { graphs.push_back(graph); });
  return graphs;
}

}  // namespace severi

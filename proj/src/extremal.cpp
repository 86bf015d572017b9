#include "akgraph/extremal.hpp"

#include <stdexcept>

#include "akgraph/kekule.hpp"

namespace akgraph {

int max_member_size(int half_order) {
  if (half_order < 1)
    throw std::invalid_argument("max_member_size: half order must be positive");
  if (half_order == 1) return 1;
  if (half_order == 2) return 4;
  return half_order * (half_order + 1) / 2;
}

std::vector<Graph> extremal_graphs(int half_order) {
  if (half_order < 1 || half_order > 10)
    throw std::invalid_argument("extremal_graphs: half order must be in [1, 10]");
  switch (half_order) {
    case 1: return {gen_complete(2)};
    case 2: return {gen_cycle(4)};
    case 3:
      // three graphs tie at six edges; the third is the 4-cycle with a
      // pendant 2-path, whose four spanning trees all have perfect matchings
      return {gen_cycle(6), corona(gen_complete(3)),
              Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}})};
    default: return {corona(gen_complete(half_order))};
  }
}

MaxSizeResult max_size_search(std::span<const Graph> graphs, int half_order) {
  const int order = 2 * half_order;
  MaxSizeResult result;
  for (const Graph& g : graphs) {
    if (g.order() != order)
      throw std::invalid_argument("max_size_search: graph order does not match the half order");
    if (!recognize(g).member) continue;
    if (g.size() < result.max_size) continue;
    if (g.size() > result.max_size) {
      result.max_size = g.size();
      result.argmax.clear();
    }
    bool fresh = true;
    if (order <= 10)
      for (const Graph& kept : result.argmax)
        if (is_isomorphic(kept, g)) {
          fresh = false;
          break;
        }
    if (fresh) result.argmax.push_back(g);
  }
  return result;
}

}  // namespace akgraph

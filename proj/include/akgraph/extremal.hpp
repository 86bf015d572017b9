#ifndef AKGRAPH_EXTREMAL_HPP
#define AKGRAPH_EXTREMAL_HPP

#include <span>
#include <vector>

#include "akgraph/graph.hpp"

namespace akgraph {

/// Sharp upper bound on the edge count of a connected graph of order
/// 2·half_order whose every spanning tree has a perfect matching:
/// 1, 4, then n(n+1)/2 from half_order n = 3 on. half_order must be >= 1.
int max_member_size(int half_order);

/// The graphs attaining max_member_size, up to isomorphism: K₂, then C₄,
/// then {C₆, K₃∘K₁, the 4-cycle with a pendant 2-path}, then Kₙ∘K₁ alone.
/// Supported for half_order 1..10.
std::vector<Graph> extremal_graphs(int half_order);

struct MaxSizeResult {
  int max_size = -1;          // -1 when the input holds no member at all
  std::vector<Graph> argmax;  // the members attaining max_size
};

/// Filter connected graphs of order 2·half_order down to the members and
/// report the largest edge count with every graph attaining it. The argmax
/// list is deduplicated up to isomorphism through order 10 and kept
/// verbatim beyond that.
MaxSizeResult max_size_search(std::span<const Graph> graphs, int half_order);

}  // namespace akgraph

#endif  // AKGRAPH_EXTREMAL_HPP

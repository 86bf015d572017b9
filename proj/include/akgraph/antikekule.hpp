#ifndef AKGRAPH_ANTIKEKULE_HPP
#define AKGRAPH_ANTIKEKULE_HPP

#include <stdexcept>
#include <vector>

#include "akgraph/graph.hpp"

namespace akgraph {

/// Raised when a caller-limited search depth runs out before the number is
/// settled. Never happens with the default bound: membership is decided
/// first, so a search only starts when some refuting set must exist.
struct AkBoundExhausted : std::runtime_error {
  int max_k;
  explicit AkBoundExhausted(int k)
      : std::runtime_error("anti-Kekulé search exhausted its size bound"), max_k(k) {}
};

enum class AkKind {
  kNumber,      // minimum size k, optionally with every minimum set
  kNoneExists,  // every spanning tree keeps a perfect matching: no set works
  kZero,        // the graph already has no perfect matching
};

struct AkResult {
  AkKind kind = AkKind::kZero;
  int k = 0;                                // meaningful for kNumber
  std::vector<std::vector<Edge>> min_sets;  // filled when collect_all was set
};

/// True iff removing s keeps g connected and destroys every perfect
/// matching. s must consist of distinct edges of g; g must be connected.
bool is_anti_kekule_set(const Graph& g, const std::vector<Edge>& s);

/// Exact anti-Kekulé number by iterative deepening over removal-set sizes
/// 1..max_k (negative max_k means the full edge count). Branches that
/// disconnect the residual graph are pruned. With collect_all, min_sets
/// holds every minimum set in lexicographic edge-index order.
AkResult anti_kekule_number(const Graph& g, int max_k = -1, bool collect_all = false);

}  // namespace akgraph

#endif  // AKGRAPH_ANTIKEKULE_HPP

#ifndef AKGRAPH_SPANNING_HPP
#define AKGRAPH_SPANNING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "akgraph/graph.hpp"
#include "akgraph/matching.hpp"

namespace akgraph {

/// Spanning-tree enumeration ran past the caller's cap. Carries how many
/// trees were visited before giving up.
struct TreeCountCapExceeded : std::runtime_error {
  std::uint64_t visited;
  explicit TreeCountCapExceeded(std::uint64_t v)
      : std::runtime_error("spanning-tree enumeration exceeded its cap"), visited(v) {}
};

inline constexpr std::uint64_t kDefaultTreeCap = 1'000'000;

bool is_tree(const Graph& g);

/// Deterministic spanning tree: lowest-index edges first (Kruskal order).
Graph any_spanning_tree(const Graph& g);

namespace detail {

// Include/exclude backtracking over the edge list in index order, pruned by
// a connectivity check on {kept edges} ∪ {undecided edges}. Trees come out
// in lexicographic order of their edge-index sets.
template <class Visit>
class SpanningTreeEnumerator {
 public:
  SpanningTreeEnumerator(const Graph& g, std::uint64_t cap, Visit& visit)
      : g_(g), edges_(g.edges()), cap_(cap), visit_(visit),
        parent_(g.order()), rank_(g.order(), 0) {
    for (int v = 0; v < g_.order(); ++v) parent_[v] = v;
  }

  std::uint64_t run() {
    recurse(0);
    return count_;
  }

 private:
  struct UndoRec {
    int child;
    int parent;
    bool rank_bumped;
  };

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // union without path compression so it can be rolled back in LIFO order
  UndoRec link(int a, int b) {
    int ra = find(a), rb = find(b);
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    bool bump = rank_[ra] == rank_[rb];
    parent_[rb] = ra;
    if (bump) ++rank_[ra];
    return {rb, ra, bump};
  }

  void unlink(const UndoRec& rec) {
    parent_[rec.child] = rec.child;
    if (rec.rank_bumped) --rank_[rec.parent];
  }

  bool rest_can_connect(std::size_t next) const {
    // BFS over kept edges plus every undecided edge
    std::array<VertexMask, Graph::kMaxVertices> adj{};
    for (const Edge& e : tree_) {
      adj[e.u] |= vbit(e.v);
      adj[e.v] |= vbit(e.u);
    }
    for (std::size_t i = next; i < edges_.size(); ++i) {
      adj[edges_[i].u] |= vbit(edges_[i].v);
      adj[edges_[i].v] |= vbit(edges_[i].u);
    }
    VertexMask comp = vbit(0), frontier = comp;
    while (frontier) {
      VertexMask grow = 0, f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        grow |= adj[v];
      }
      grow &= ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp == g_.vertices();
  }

  // returns false when the visitor asked to stop
  bool recurse(std::size_t i) {
    if (static_cast<int>(tree_.size()) == g_.order() - 1) {
      if (count_ == cap_) throw TreeCountCapExceeded(count_);
      ++count_;
      return visit_(std::span<const Edge>(tree_));
    }
    if (i == edges_.size()) return true;
    if (tree_.size() + (edges_.size() - i) < static_cast<std::size_t>(g_.order()) - 1)
      return true;  // not enough edges left
    const Edge& e = edges_[i];
    if (find(e.u) != find(e.v)) {
      UndoRec undo = link(e.u, e.v);
      tree_.push_back(e);
      bool go_on = recurse(i + 1);
      tree_.pop_back();
      unlink(undo);
      if (!go_on) return false;
    }
    if (rest_can_connect(i + 1)) return recurse(i + 1);
    return true;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::uint64_t cap_;
  Visit& visit_;
  std::vector<int> parent_, rank_;
  std::vector<Edge> tree_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

/// Visit every spanning tree of a connected graph exactly once, in
/// lexicographic order of the edge-index sets. `visit` receives the tree's
/// edges in ascending order and returns false to stop early. Returns the
/// number of trees visited; throws TreeCountCapExceeded beyond `cap`.
template <class Visit>
std::uint64_t enumerate_spanning_trees(const Graph& g, std::uint64_t cap, Visit&& visit) {
  if (!is_connected(g))
    throw std::invalid_argument("enumerate_spanning_trees: graph must be connected");
  detail::SpanningTreeEnumerator<Visit> e(g, cap, visit);
  return e.run();
}

/// The unique perfect matching of a tree if there is one (greedy: repeatedly
/// match the lowest-numbered leaf to its neighbor).
std::optional<Matching> tree_perfect_matching(const Graph& t);

/// True iff every vertex deletion leaves exactly one odd component —
/// equivalent to the tree having a perfect matching.
bool tree_pm_criterion(const Graph& t);

/// Spanning 2-connected subgraph from which no single edge can be removed,
/// by greedy removal in ascending edge order.
Graph minimally_2connected_spanning(const Graph& g);

/// Structure of a minimally 2-connected non-cycle graph h: the degree-2
/// vertices V₂, and the forest h − V₂ (at least two components; every
/// component of h[V₂] is a path whose ends attach to distinct trees).
/// Violations of those structural facts throw logic_error.
struct BollobasStructure {
  VertexMask degree_two = 0;        // V₂, in h's vertex ids
  Graph forest;                     // h − V₂, densely relabeled
  std::vector<int> forest_old_ids;  // forest id -> h id
};

BollobasStructure bollobas_structure(const Graph& h);

/// For a 2-connected graph that is not a cycle, build a spanning tree with
/// no perfect matching. Works through a minimally 2-connected spanning
/// subgraph H: if H is a cycle it is a Hamilton cycle, and rerouting around
/// a chord leaves a tree with a degree-2 "elbow" that kills the matching;
/// otherwise two degree-2 vertices are hung as twin leaves off one vertex.
Graph unmatchable_spanning_tree(const Graph& g);

}  // namespace akgraph

#endif  // AKGRAPH_SPANNING_HPP

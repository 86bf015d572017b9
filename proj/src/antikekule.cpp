#include "akgraph/antikekule.hpp"

#include <atomic>
#include <stdexcept>

#include "akgraph/kekule.hpp"
#include "akgraph/matching.hpp"

namespace akgraph {

bool is_anti_kekule_set(const Graph& g, const std::vector<Edge>& s) {
  if (!is_connected(g))
    throw std::invalid_argument("is_anti_kekule_set: graph must be connected");
  Graph h = g;
  for (const Edge& e : s) {
    // a repeated edge fails here too: the first occurrence removed it
    if (!h.has_edge(e.u, e.v))
      throw std::invalid_argument("is_anti_kekule_set: s must be distinct edges of g");
    h.remove_edge(e.u, e.v);
  }
  return is_connected(h) && !has_perfect_matching(h);
}

namespace {

/// Depth-first search over ascending edge-index subsets of one fixed size.
/// The residual graph is kept connected along every explored branch, so a
/// full-size subset only needs its matching checked. Each searcher owns the
/// subtree below one choice of smallest index, which keeps slots independent
/// and their concatenation lexicographic.
struct AkSearcher {
  const std::vector<Edge>& edges;
  int k;
  bool collect_all;
  std::atomic<bool>& stop;

  Graph work;
  std::vector<int> chosen;
  std::vector<std::vector<Edge>> hits;
  bool found = false;

  AkSearcher(const Graph& g, const std::vector<Edge>& es, int k_, bool all,
             std::atomic<bool>& st)
      : edges(es), k(k_), collect_all(all), stop(st), work(g) {}

  void run_from(int first) {
    if (!collect_all && stop.load(std::memory_order_relaxed)) return;
    const Edge& e = edges[first];
    work.remove_edge(e.u, e.v);
    if (is_connected(work)) {
      chosen.push_back(first);
      recurse(first + 1);
      chosen.pop_back();
    }
    work.add_edge(e.u, e.v);
  }

  void recurse(int start) {
    if (static_cast<int>(chosen.size()) == k) {
      if (has_perfect_matching(work)) return;
      found = true;
      if (collect_all) {
        std::vector<Edge> s;
        s.reserve(k);
        for (int i : chosen) s.push_back(edges[i]);
        hits.push_back(std::move(s));
      } else {
        stop.store(true, std::memory_order_relaxed);
      }
      return;
    }
    const int m = static_cast<int>(edges.size());
    const int need = k - static_cast<int>(chosen.size());
    for (int i = start; m - i >= need; ++i) {
      if (!collect_all && (found || stop.load(std::memory_order_relaxed))) return;
      const Edge& e = edges[i];
      work.remove_edge(e.u, e.v);
      if (is_connected(work)) {
        chosen.push_back(i);
        recurse(i + 1);
        chosen.pop_back();
      }
      work.add_edge(e.u, e.v);
    }
  }
};

}  // namespace

AkResult anti_kekule_number(const Graph& g, int max_k, bool collect_all) {
  if (!is_connected(g))
    throw std::invalid_argument("anti_kekule_number: graph must be connected");
  AkResult r;
  if (recognize(g).member) {
    r.kind = AkKind::kNoneExists;
    return r;
  }
  if (!has_perfect_matching(g)) {
    r.kind = AkKind::kZero;
    return r;
  }

  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int bound = (max_k < 0 || max_k > m) ? m : max_k;

  for (int k = 1; k <= bound; ++k) {
    std::atomic<bool> stop{false};
    std::vector<AkSearcher> slots;
    slots.reserve(m);
    for (int i = 0; i < m; ++i) slots.emplace_back(g, edges, k, collect_all, stop);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i <= m - k; ++i) slots[i].run_from(i);

    bool found = false;
    for (const AkSearcher& s : slots) found = found || s.found;
    if (!found) continue;

    r.kind = AkKind::kNumber;
    r.k = k;
    if (collect_all)
      for (AkSearcher& s : slots)
        for (std::vector<Edge>& hit : s.hits) r.min_sets.push_back(std::move(hit));
    return r;
  }

  // the graph is a non-member with a perfect matching, so removing every
  // non-edge of a refuting spanning tree always works within |E| removals
  if (bound == m)
    throw std::logic_error("anti_kekule_number: search exhausted the full edge count");
  throw AkBoundExhausted(bound);
}

}  // namespace akgraph

#include "akgraph/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace akgraph {

namespace {

// Edmonds' blossom algorithm in the classic array formulation: BFS a tree of
// alternating paths from each free vertex, contracting odd cycles (blossoms)
// by redirecting `base` pointers, until an augmenting path appears.
struct Blossom {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> used, in_blossom;

  explicit Blossom(const Graph& graph)
      : g(graph), n(graph.order()), match(n, -1), parent(n, -1), base(n),
        used(n, 0), in_blossom(n, 0) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  // Returns a free vertex reached by an augmenting path from root, or -1.
  int find_augmenting_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      VertexMask nb = g.neighbors(v);
      while (nb) {
        int to = std::countr_zero(nb);
        nb &= nb - 1;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // odd cycle: contract the blossom through the common base
          int cur = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[v], next = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = next;
    }
  }

  void run() {
    // greedy seed matching saves most of the BFS rounds
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      VertexMask nb = g.neighbors(v);
      while (nb) {
        int to = std::countr_zero(nb);
        nb &= nb - 1;
        if (match[to] == -1) {
          match[v] = to;
          match[to] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (match[v] == -1) {
        int tail = find_augmenting_path(v);
        if (tail != -1) augment(tail);
      }
  }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  Blossom b(g);
  b.run();
  Matching m;
  for (int v = 0; v < g.order(); ++v)
    if (b.match[v] > v) {
      m.edges.emplace_back(v, b.match[v]);
      m.covered |= vbit(v) | vbit(b.match[v]);
    }
  return m;
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return maximum_matching(g).size() * 2 == g.order();
}

namespace {

// Visit all k-subsets of 0..n-1 in lexicographic order of the sorted vertex
// list; visit returns false to stop early. Returns false if stopped.
template <class Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return true;
  for (;;) {
    if (!visit(pick)) return false;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::optional<TutteWitness> tutte_witness(const Graph& g) {
  if (g.order() > 20)
    throw std::invalid_argument("tutte_witness: subset search capped at order 20");
  if (has_perfect_matching(g)) return std::nullopt;
  // Tutte's theorem guarantees a violator; scan by size, then lexicographically.
  for (int k = 0; k <= g.order(); ++k) {
    std::optional<TutteWitness> found;
    for_each_subset(g.order(), k, [&](const std::vector<int>& pick) {
      VertexMask s = 0;
      for (int v : pick) s |= vbit(v);
      int odd = odd_component_count(g, s);
      if (odd > k) {
        found = TutteWitness{s, odd};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  throw std::logic_error("tutte_witness: no violator found for a matchable graph");
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::kFixedDouble: return "fixed-double";
    case EdgeClass::kFixedSingle: return "fixed-single";
    case EdgeClass::kFree: return "free";
    case EdgeClass::kNoPerfectMatching: return "no-perfect-matching";
  }
  return "?";
}

EdgeClass classify_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("classify_edge: no such edge");
  if (!has_perfect_matching(g)) return EdgeClass::kNoPerfectMatching;
  Graph without = g;
  without.remove_edge(e.u, e.v);
  if (!has_perfect_matching(without)) return EdgeClass::kFixedDouble;
  // perfect matchings of g using e = perfect matchings of g - u - v
  Graph shrunk = g.induced(g.vertices() & ~(vbit(e.u) | vbit(e.v)));
  if (!has_perfect_matching(shrunk)) return EdgeClass::kFixedSingle;
  return EdgeClass::kFree;
}

}  // namespace akgraph

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "akgraph/graph.hpp"
#include "akgraph/matching.hpp"
#include "akgraph/rng.hpp"
#include "akgraph/spanning.hpp"

using namespace akgraph;

namespace {

Graph graph_from_pair_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((bits >> k) & 1) g.add_edge(u, v);
  return g;
}

// Kirchhoff's matrix-tree count via fraction-free (Bareiss) elimination of a
// Laplacian minor; exact in 64-bit for the orders used here.
std::int64_t kirchhoff_count(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 1;
  const int d = n - 1;
  std::vector<std::vector<std::int64_t>> a(d, std::vector<std::int64_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      a[i][j] = i == j ? g.degree(i) : (g.has_edge(i, j) ? -1 : 0);
  std::int64_t prev = 1, sign = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < d && a[r][k] == 0) ++r;
      if (r == d) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[d - 1][d - 1];
}

Graph tree_from_edges(int n, std::span<const Edge> edges) {
  Graph t(n);
  for (const Edge& e : edges) t.add_edge(e.u, e.v);
  return t;
}

// theta graph: two branch vertices 0, 1 joined by three internally disjoint
// paths with the given numbers of interior vertices
Graph theta(int p1, int p2, int p3) {
  int n = 2 + p1 + p2 + p3;
  Graph g(n);
  int next = 2;
  for (int len : {p1, p2, p3}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

}  // namespace

TEST_SUITE("spanning") {

TEST_CASE("any_spanning_tree fixtures") {
  Graph t = any_spanning_tree(gen_cycle(4));
  // drops the highest-index edge (2,3), leaving the path 3-0-1-2
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(is_isomorphic(t, gen_path(4)));
  CHECK(any_spanning_tree(gen_complete(2)) == gen_complete(2));
  Graph t3 = any_spanning_tree(gen_complete(3));
  CHECK(t3.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK_THROWS_AS(any_spanning_tree(Graph(3)), std::invalid_argument);
}

TEST_CASE("is_tree") {
  CHECK(is_tree(gen_path(1)));
  CHECK(is_tree(gen_path(5)));
  CHECK_FALSE(is_tree(gen_cycle(4)));
  CHECK_FALSE(is_tree(Graph(2)));  // disconnected
}

TEST_CASE("spanning tree counts match Kirchhoff's theorem") {
  auto count = [](const Graph& g) {
    return enumerate_spanning_trees(g, kDefaultTreeCap, [](std::span<const Edge>) { return true; });
  };
  CHECK(count(gen_complete(3)) == 3);
  CHECK(count(gen_complete(4)) == 16);   // Cayley: 4^2
  CHECK(count(gen_cycle(4)) == 4);
  CHECK(count(gen_cycle(6)) == 6);
  CHECK(count(gen_complete(6)) == 1296);  // 6^4

  Rng rng(23);
  int done = 0;
  while (done < 200) {
    int n = 2 + rng.next_int(6);
    Graph g = random_graph(n, rng);
    if (!is_connected(g)) continue;
    ++done;
    CHECK(count(g) == static_cast<std::uint64_t>(kirchhoff_count(g)));
  }
}

TEST_CASE("enumeration emits valid, distinct trees in lexicographic index order") {
  Rng rng(31);
  int done = 0;
  while (done < 100) {
    int n = 2 + rng.next_int(5);
    Graph g = random_graph(n, rng);
    if (!is_connected(g)) continue;
    ++done;
    std::vector<Edge> all = g.edges();
    auto index_of = [&](const Edge& e) {
      return std::find(all.begin(), all.end(), e) - all.begin();
    };
    std::vector<std::vector<long>> seen;
    enumerate_spanning_trees(g, kDefaultTreeCap, [&](std::span<const Edge> edges) {
      Graph t = tree_from_edges(n, edges);
      CHECK(is_tree(t));
      for (const Edge& e : edges) CHECK(g.has_edge(e.u, e.v));
      std::vector<long> idx;
      for (const Edge& e : edges) idx.push_back(index_of(e));
      CHECK(std::is_sorted(idx.begin(), idx.end()));
      if (!seen.empty()) CHECK(seen.back() < idx);
      seen.push_back(idx);
      return true;
    });
  }
}

TEST_CASE("enumeration honors early stop and the cap") {
  std::uint64_t visited = 0;
  std::uint64_t got = enumerate_spanning_trees(gen_complete(5), kDefaultTreeCap,
                                               [&](std::span<const Edge>) { return ++visited < 2; });
  CHECK(got == 2);
  CHECK(visited == 2);

  try {
    enumerate_spanning_trees(gen_complete(5), 10, [](std::span<const Edge>) { return true; });
    FAIL("cap should have fired");
  } catch (const TreeCountCapExceeded& e) {
    CHECK(e.visited == 10);
  }
  CHECK_THROWS_AS(
      enumerate_spanning_trees(Graph(2), 10, [](std::span<const Edge>) { return true; }),
      std::invalid_argument);
}

TEST_CASE("tree perfect matching fixtures") {
  auto p4 = tree_perfect_matching(gen_path(4));
  REQUIRE(p4.has_value());
  CHECK(p4->edges == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_FALSE(tree_perfect_matching(gen_path(3)).has_value());
  CHECK_FALSE(tree_perfect_matching(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})).has_value());
  CHECK_THROWS_AS(tree_perfect_matching(gen_cycle(4)), std::invalid_argument);

  CHECK(tree_pm_criterion(gen_path(2)));
  CHECK(tree_pm_criterion(gen_path(4)));
  CHECK_FALSE(tree_pm_criterion(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK_FALSE(tree_pm_criterion(gen_path(1)));
  CHECK_THROWS_AS(tree_pm_criterion(gen_cycle(4)), std::invalid_argument);
}

TEST_CASE("matching criterion agrees with the greedy matcher on every tree, order <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t top = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < top; ++bits) {
      Graph g = graph_from_pair_bits(n, bits);
      if (!is_connected(g)) continue;
      enumerate_spanning_trees(g, kDefaultTreeCap, [&](std::span<const Edge> edges) {
        Graph t = tree_from_edges(n, edges);
        auto pm = tree_perfect_matching(t);
        CHECK(pm.has_value() == tree_pm_criterion(t));
        CHECK(pm.has_value() == has_perfect_matching(t));
        if (pm) CHECK(pm->covered == t.vertices());
        return true;
      });
    }
  }
}

TEST_CASE("matching criterion agrees on sampled graphs of order 7") {
  Rng rng(37);
  int done = 0;
  while (done < 2000) {
    Graph g = random_graph(7, rng);
    if (!is_connected(g)) continue;
    ++done;
    enumerate_spanning_trees(g, kDefaultTreeCap, [&](std::span<const Edge> edges) {
      Graph t = tree_from_edges(7, edges);
      CHECK(tree_perfect_matching(t).has_value() == tree_pm_criterion(t));
      return true;
    });
  }
}

TEST_CASE("minimally 2-connected spanning subgraphs") {
  Graph h4 = minimally_2connected_spanning(gen_complete(4));
  CHECK(h4.order() == 4);
  CHECK(h4.size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(h4.degree(v) == 2);  // a Hamilton cycle
  CHECK(minimally_2connected_spanning(gen_cycle(6)) == gen_cycle(6));

  Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(minimally_2connected_spanning(k23) == k23);

  CHECK_THROWS_AS(minimally_2connected_spanning(gen_path(4)), std::invalid_argument);

  Rng rng(43);
  int done = 0;
  while (done < 150) {
    int n = 3 + rng.next_int(6);
    Graph g = random_graph(n, rng);
    if (!is_two_connected(g)) continue;
    ++done;
    Graph h = minimally_2connected_spanning(g);
    CHECK(h.order() == n);
    CHECK(is_two_connected(h));
    for (const Edge& e : h.edges()) {
      CHECK(g.has_edge(e.u, e.v));
      Graph probe = h;
      probe.remove_edge(e.u, e.v);
      CHECK_FALSE(is_two_connected(probe));
    }
  }
}

TEST_CASE("structure of minimally 2-connected non-cycles") {
  Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  BollobasStructure s = bollobas_structure(k23);
  CHECK(s.degree_two == mask_of({2, 3, 4}));
  CHECK(s.forest.order() == 2);
  CHECK(s.forest.size() == 0);
  CHECK(s.forest_old_ids == std::vector<int>{0, 1});

  // theta with interior path sizes 1,1,2: same shape, one longer arm
  BollobasStructure t = bollobas_structure(theta(1, 1, 2));
  CHECK(t.forest.order() == 2);
  CHECK(t.forest.size() == 0);
  CHECK(mask_size(t.degree_two) == 4);

  CHECK_THROWS_AS(bollobas_structure(gen_cycle(6)), std::invalid_argument);
  CHECK_THROWS_AS(bollobas_structure(gen_complete(4)), std::invalid_argument);  // not minimal
  CHECK_THROWS_AS(bollobas_structure(gen_path(3)), std::invalid_argument);

  // never trips its internal assertions on any eligible graph of order <= 6
  for (int n = 4; n <= 6; ++n) {
    const std::uint64_t top = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < top; ++bits) {
      Graph g = graph_from_pair_bits(n, bits);
      if (!is_two_connected(g)) continue;
      Graph h = minimally_2connected_spanning(g);
      bool cyc = true;
      for (int v = 0; v < n && cyc; ++v) cyc = h.degree(v) == 2;
      if (cyc) continue;
      CHECK_NOTHROW(bollobas_structure(h));
    }
  }
}

TEST_CASE("witness spanning trees, hand-computed fixtures") {
  // diamond: reroute around the chord 0-2 leaves the star at vertex 2
  Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  Graph wd = unmatchable_spanning_tree(diamond);
  CHECK(wd.edges() == std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}});
  CHECK_FALSE(tree_pm_criterion(wd));

  Graph wk4 = unmatchable_spanning_tree(gen_complete(4));
  CHECK(wk4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}});
  CHECK_FALSE(tree_pm_criterion(wk4));

  Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  Graph wk23 = unmatchable_spanning_tree(k23);
  CHECK(wk23.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 4}});
  CHECK_FALSE(tree_pm_criterion(wk23));

  CHECK_THROWS_AS(unmatchable_spanning_tree(gen_cycle(6)), std::invalid_argument);
  CHECK_THROWS_AS(unmatchable_spanning_tree(gen_path(4)), std::invalid_argument);
}

TEST_CASE("witness spanning trees are valid on every 2-connected non-cycle, order <= 6") {
  for (int n = 4; n <= 6; ++n) {
    const std::uint64_t top = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < top; ++bits) {
      Graph g = graph_from_pair_bits(n, bits);
      if (!is_two_connected(g)) continue;
      bool cyc = true;
      for (int v = 0; v < n && cyc; ++v) cyc = g.degree(v) == 2;
      if (cyc) continue;
      Graph t = unmatchable_spanning_tree(g);
      CHECK(is_tree(t));
      CHECK(t.order() == n);
      for (const Edge& e : t.edges()) CHECK(g.has_edge(e.u, e.v));
      CHECK_FALSE(tree_pm_criterion(t));
    }
  }
}

}  // TEST_SUITE

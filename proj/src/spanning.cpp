#include "akgraph/spanning.hpp"

#include <algorithm>

namespace akgraph {

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph any_spanning_tree(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("any_spanning_tree: graph must be connected");
  Graph t(g.order());
  std::vector<int> parent(g.order());
  for (int v = 0; v < g.order(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    int ru = find(e.u), rv = find(e.v);
    if (ru == rv) continue;
    parent[ru] = rv;
    t.add_edge(e.u, e.v);
    if (t.size() == g.order() - 1) break;
  }
  return t;
}

std::optional<Matching> tree_perfect_matching(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_perfect_matching: input is not a tree");
  Matching m;
  VertexMask alive = t.vertices();
  while (alive) {
    // lowest-numbered leaf of the surviving forest; its neighbor is forced
    int leaf = -1;
    VertexMask scan = alive;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int deg = std::popcount(t.neighbors(v) & alive);
      if (deg == 0) return std::nullopt;  // stranded vertex, no perfect matching
      if (deg == 1) {
        leaf = v;
        break;
      }
    }
    // a nonempty forest with no isolated vertex always has a leaf
    int partner = std::countr_zero(t.neighbors(leaf) & alive);
    m.edges.emplace_back(leaf, partner);
    m.covered |= vbit(leaf) | vbit(partner);
    alive &= ~(vbit(leaf) | vbit(partner));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool tree_pm_criterion(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_pm_criterion: input is not a tree");
  for (int v = 0; v < t.order(); ++v)
    if (odd_component_count(t, vbit(v)) != 1) return false;
  return true;
}

Graph minimally_2connected_spanning(const Graph& g) {
  if (!is_two_connected(g))
    throw std::invalid_argument("minimally_2connected_spanning: graph must be 2-connected");
  // One ascending pass suffices: once H - e stops being 2-connected it stays
  // broken in every smaller H, since deleting edges never restores it.
  Graph h = g;
  for (const Edge& e : g.edges()) {
    h.remove_edge(e.u, e.v);
    if (!is_two_connected(h)) h.add_edge(e.u, e.v);
  }
  return h;
}

namespace {

bool is_minimally_2connected(const Graph& h) {
  if (!is_two_connected(h)) return false;
  Graph probe = h;
  for (const Edge& e : h.edges()) {
    probe.remove_edge(e.u, e.v);
    bool still = is_two_connected(probe);
    probe.add_edge(e.u, e.v);
    if (still) return false;
  }
  return true;
}

}  // namespace

BollobasStructure bollobas_structure(const Graph& h) {
  if (!is_minimally_2connected(h))
    throw std::invalid_argument("bollobas_structure: graph must be minimally 2-connected");
  if (is_cycle_graph(h))
    throw std::invalid_argument("bollobas_structure: cycles carry no structure, need a non-cycle");

  BollobasStructure out;
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) == 2) out.degree_two |= vbit(v);
  const VertexMask fmask = h.vertices() & ~out.degree_two;
  out.forest = h.induced(fmask, &out.forest_old_ids);

  // Everything below is guaranteed by the structure theorem for minimally
  // 2-connected graphs; a violation means a bug upstream, not bad input.
  auto fcomps = components_within(h, fmask);
  if (fcomps.size() < 2)
    throw std::logic_error("bollobas_structure: forest must have at least two components");
  for (VertexMask comp : fcomps) {
    int edges_inside = h.induced(comp).size();
    if (edges_inside != mask_size(comp) - 1)
      throw std::logic_error("bollobas_structure: component of h - V2 is not a tree");
  }
  auto tree_of = [&](int v) -> int {
    for (std::size_t i = 0; i < fcomps.size(); ++i)
      if (fcomps[i] & vbit(v)) return static_cast<int>(i);
    throw std::logic_error("bollobas_structure: vertex missing from every forest tree");
  };
  for (VertexMask pcomp : components_within(h, out.degree_two)) {
    // each component of h[V2] must be a path
    std::vector<int> ends;
    for (int v : mask_vertices(pcomp)) {
      int inside = std::popcount(h.neighbors(v) & pcomp);
      if (inside > 2) throw std::logic_error("bollobas_structure: h[V2] component is not a path");
      if (inside <= 1) ends.push_back(v);
    }
    if (ends.empty())
      throw std::logic_error("bollobas_structure: h[V2] component is a cycle, not a path");
    // ...whose end attachments reach two distinct trees of the forest
    std::vector<int> touched;
    for (int v : ends)
      for (int u : mask_vertices(h.neighbors(v) & fmask)) touched.push_back(tree_of(u));
    if (touched.size() != 2)
      throw std::logic_error("bollobas_structure: path ends must contribute two forest attachments");
    if (touched[0] == touched[1])
      throw std::logic_error("bollobas_structure: path ends attach to the same forest tree");
  }
  return out;
}

Graph unmatchable_spanning_tree(const Graph& g) {
  if (!is_two_connected(g))
    throw std::invalid_argument("unmatchable_spanning_tree: graph must be 2-connected");
  if (is_cycle_graph(g))
    throw std::invalid_argument("unmatchable_spanning_tree: cycles are out of scope");

  const Graph h = minimally_2connected_spanning(g);

  if (is_cycle_graph(h)) {
    // h is a Hamilton cycle. Take the least chord v1-vk of g, walk the cycle
    // from v1 toward its smaller neighbor, and reroute: drop the two cycle
    // edges straddling positions k-1 and k+1, add the chord. Both removed
    // ends reconnect through the chord, and vk keeps exactly two tree
    // neighbors whose subtrees have odd order, so no perfect matching fits.
    const int n = g.order();
    std::vector<Edge> chords;
    for (const Edge& e : g.edges())
      if (!h.has_edge(e.u, e.v)) chords.push_back(e);
    if (chords.empty())
      throw std::logic_error("unmatchable_spanning_tree: non-cycle graph without chords");
    const Edge chord = *std::min_element(chords.begin(), chords.end());

    std::vector<int> label(n);       // position on the cycle -> vertex
    label[0] = chord.u;
    label[1] = lowest_vertex(h.neighbors(chord.u));
    for (int i = 2; i < n; ++i)
      label[i] = lowest_vertex(h.neighbors(label[i - 1]) & ~vbit(label[i - 2]));
    int k = -1;  // 1-based position of the chord's far endpoint
    for (int i = 0; i < n; ++i)
      if (label[i] == chord.v) k = i + 1;
    if (k < 3 || k > n - 1)
      throw std::logic_error("unmatchable_spanning_tree: chord endpoint landed on the cycle rim");

    const Edge drop_a(label[k - 3], label[k - 2]);
    const Edge drop_b(label[k % n], label[(k + 1) % n]);
    Graph t(n);
    for (int i = 0; i < n; ++i) {
      Edge e(label[i], label[(i + 1) % n]);
      if (e == drop_a || e == drop_b) continue;
      t.add_edge(e.u, e.v);
    }
    t.add_edge(chord.u, chord.v);
    if (!is_tree(t))
      throw std::logic_error("unmatchable_spanning_tree: rerouted cycle is not a tree");
    return t;
  }

  // h is not a cycle: hang two degree-2 vertices u, w as twin leaves off a
  // forest vertex v; v's deletion then leaves two odd singletons.
  BollobasStructure s = bollobas_structure(h);
  const VertexMask fmask = h.vertices() & ~s.degree_two;
  int v = -1;
  for (int cand : mask_vertices(fmask))
    if (std::popcount(h.neighbors(cand) & fmask) <= 1) {
      v = cand;
      break;
    }
  if (v == -1) throw std::logic_error("unmatchable_spanning_tree: forest without a leaf");
  std::vector<int> into_v2 = mask_vertices(h.neighbors(v) & s.degree_two);
  if (into_v2.size() < 2)
    throw std::logic_error("unmatchable_spanning_tree: forest leaf needs two degree-2 neighbors");
  const int u = into_v2[0], w = into_v2[1];

  const VertexMask keep = h.vertices() & ~(vbit(u) | vbit(w));
  if (!is_connected_within(h, keep))
    throw std::logic_error("unmatchable_spanning_tree: removing u, w disconnected the core");
  std::vector<int> ids;
  Graph sub_tree = any_spanning_tree(h.induced(keep, &ids));
  Graph t(g.order());
  for (const Edge& e : sub_tree.edges()) t.add_edge(ids[e.u], ids[e.v]);
  t.add_edge(v, u);
  t.add_edge(v, w);
  if (!is_tree(t))
    throw std::logic_error("unmatchable_spanning_tree: assembled subgraph is not a tree");
  return t;
}

}  // namespace akgraph

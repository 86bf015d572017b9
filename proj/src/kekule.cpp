#include "akgraph/kekule.hpp"

#include <algorithm>
#include <set>

#include "akgraph/matching.hpp"
#include "akgraph/rng.hpp"

namespace akgraph {

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

// least vertex whose deletion leaves >= 3 odd components; for an even-order
// tree this exists exactly when the tree has no perfect matching
std::optional<int> find_bad_vertex(const Graph& t) {
  for (int v = 0; v < t.order(); ++v)
    if (odd_component_count(t, vbit(v)) >= 3) return v;
  return std::nullopt;
}

Witness witness_from_tree(const Graph& g, const Graph& t) {
  Witness w;
  w.tree = t.edges();
  if (g.order() % 2 == 1) {
    w.odd_order = true;
    return w;
  }
  auto bad = find_bad_vertex(t);
  if (!bad) throw std::logic_error("recognize: chosen witness tree has a perfect matching");
  w.bad_vertex = *bad;
  return w;
}

int map_id(int id, const std::vector<int>& to_parent) {
  return id >= kVirtualIdBase ? id : to_parent[id];
}

// the maps used here are monotone (induced-subgraph relabelings, with any
// virtual pendant above everything), so ascending invariants survive
void remap_certificate(Certificate& c, const std::vector<int>& m) {
  std::visit(Overload{
                 [&](CertBaseEdge& n) {
                   n.u = map_id(n.u, m);
                   n.v = map_id(n.v, m);
                 },
                 [&](CertBaseCycle& n) {
                   for (int& x : n.vertices) x = map_id(x, m);
                 },
                 [&](CertCorona& n) {
                   for (int& x : n.host) x = map_id(x, m);
                   for (auto& [h, l] : n.pairs) {
                     h = map_id(h, m);
                     l = map_id(l, m);
                   }
                 },
                 [&](CertGlue& n) {
                   n.attach = map_id(n.attach, m);
                   remap_certificate(*n.left, m);
                   remap_certificate(*n.right, m);
                 },
             },
             c.node);
}

void remap_witness(Witness& w, const std::vector<int>& m) {
  for (Edge& e : w.tree) e = Edge(map_id(e.u, m), map_id(e.v, m));
  if (w.bad_vertex) w.bad_vertex = map_id(*w.bad_vertex, m);
}

RecognizeResult fail_with(Witness w) {
  RecognizeResult r;
  r.member = false;
  r.witness = std::move(w);
  return r;
}

RecognizeResult member_with(Certificate c) {
  RecognizeResult r;
  r.member = true;
  r.certificate = std::move(c);
  return r;
}

struct RecognizeCtx {
  int next_virtual = kVirtualIdBase;
};

RecognizeResult recognize_impl(const Graph& g, RecognizeCtx& ctx) {
  const int n = g.order();

  // 1. parity and matchability: either kills membership outright, and then
  // every spanning tree is a witness
  if (n % 2 == 1 || !has_perfect_matching(g)) {
    return fail_with(witness_from_tree(g, any_spanning_tree(g)));
  }

  const VertexMask cuts = cut_vertices(g);

  // 2. nonseparable graphs: K2 and even cycles are the only members
  if (cuts == 0) {
    if (n == 2) return member_with(Certificate{CertBaseEdge{0, 1}});
    if (is_cycle_graph(g)) {
      CertBaseCycle c;
      c.vertices = {0, lowest_vertex(g.neighbors(0))};
      while (static_cast<int>(c.vertices.size()) < n) {
        int prev = c.vertices[c.vertices.size() - 2], cur = c.vertices.back();
        c.vertices.push_back(lowest_vertex(g.neighbors(cur) & ~vbit(prev)));
      }
      return member_with(Certificate{std::move(c)});
    }
    return fail_with(witness_from_tree(g, unmatchable_spanning_tree(g)));
  }

  // 3. split at a cut vertex v: pull off a component group of odd total
  // order >= 3, keep v on both sides, and hang a virtual pendant on the
  // left side so its parity still reflects v being spoken for.
  for (int v : mask_vertices(cuts)) {
    auto comps = components_within(g, g.vertices() & ~vbit(v));
    std::vector<VertexMask> odd, even;
    for (VertexMask c : comps) (mask_size(c) % 2 ? odd : even).push_back(c);
    // with a perfect matching around, deleting one vertex leaves exactly
    // one odd component; anything else means a bug, not an input case
    if (odd.size() != 1)
      throw std::logic_error("recognize: impossible odd-component pattern at a cut vertex");
    VertexMask group;
    if (mask_size(odd[0]) >= 3) {
      group = odd[0];
    } else if (comps.size() >= 3) {
      VertexMask smallest = even[0];
      for (VertexMask c : even)
        if (mask_size(c) < mask_size(smallest)) smallest = c;
      group = odd[0] | smallest;
    } else {
      continue;  // two components, one a singleton: nothing proper to split off here
    }

    const VertexMask v2mask = group | vbit(v);
    std::vector<int> ids2;
    const Graph g2 = g.induced(v2mask, &ids2);

    std::vector<int> ids1;
    const Graph g1core = g.induced(g.vertices() & ~group, &ids1);
    const int attach_dense = static_cast<int>(
        std::lower_bound(ids1.begin(), ids1.end(), v) - ids1.begin());
    Graph g1(g1core.order() + 1);
    for (const Edge& e : g1core.edges()) g1.add_edge(e.u, e.v);
    g1.add_edge(attach_dense, g1core.order());
    const int virt = ctx.next_virtual++;
    std::vector<int> ids1p = ids1;
    ids1p.push_back(virt);

    if (g2.order() < 4 || g2.order() % 2 || g2.order() >= n || g1.order() % 2 ||
        g1.order() >= n)
      throw std::logic_error("recognize: separation failed to shrink to smaller even parts");

    RecognizeResult right = recognize_impl(g2, ctx);
    if (!right.member) {
      remap_witness(*right.witness, ids2);
      return fail_with(lift_witness(g, *right.witness, LiftSide::kRight, v));
    }
    RecognizeResult left = recognize_impl(g1, ctx);
    if (!left.member) {
      remap_witness(*left.witness, ids1p);
      return fail_with(lift_witness(g, *left.witness, LiftSide::kLeft, v));
    }
    remap_certificate(*left.certificate, ids1p);
    remap_certificate(*right.certificate, ids2);
    CertGlue glue;
    glue.attach = v;
    glue.virtual_id = virt;
    glue.left = std::make_unique<Certificate>(std::move(*left.certificate));
    glue.right = std::make_unique<Certificate>(std::move(*right.certificate));
    return member_with(Certificate{std::move(glue)});
  }

  // 4. every cut vertex leaves exactly two components, one a lone pendant:
  // the only way to be a member now is to be a corona host∘K1
  VertexMask lmask = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) lmask |= vbit(v);
  const VertexMask hmask = g.vertices() & ~lmask;
  bool corona = hmask != 0 && mask_size(lmask) == mask_size(hmask);
  if (corona)
    for (int h : mask_vertices(hmask))
      if (std::popcount(g.neighbors(h) & lmask) != 1) {
        corona = false;
        break;
      }
  if (corona) corona = is_connected_within(g, hmask);
  if (corona) {
    CertCorona c;
    c.host = mask_vertices(hmask);
    for (int h : c.host) c.pairs.emplace_back(h, lowest_vertex(g.neighbors(h) & lmask));
    return member_with(Certificate{std::move(c)});
  }

  // witness: pick a cut vertex v with pendant u and one more non-cut
  // neighbor w; removing u and w stays connected, and a spanning tree of
  // the remainder plus vu, vw leaves v with two odd leaf-components
  for (int v : mask_vertices(cuts)) {
    VertexMask pend = g.neighbors(v) & lmask;
    if (!pend) continue;
    const int u = lowest_vertex(pend);
    for (int w : mask_vertices(g.neighbors(v) & ~vbit(u) & ~cuts)) {
      const VertexMask keep = g.vertices() & ~vbit(u) & ~vbit(w);
      if (!is_connected_within(g, keep)) continue;
      std::vector<int> ids;
      Graph rest = any_spanning_tree(g.induced(keep, &ids));
      Graph t(n);
      for (const Edge& e : rest.edges()) t.add_edge(ids[e.u], ids[e.v]);
      t.add_edge(v, u);
      t.add_edge(v, w);
      return fail_with(witness_from_tree(g, t));
    }
  }

  // fallback: scan trees in enumeration order for the first refutation
  std::optional<Witness> found;
  enumerate_spanning_trees(g, kDefaultTreeCap, [&](std::span<const Edge> edges) {
    Graph t(n);
    for (const Edge& e : edges) t.add_edge(e.u, e.v);
    if (tree_pm_criterion(t)) return true;
    found = witness_from_tree(g, t);
    return false;
  });
  if (!found)
    throw std::logic_error("recognize: corona test failed but every spanning tree matches");
  return fail_with(std::move(*found));
}

}  // namespace

RecognizeResult recognize(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("recognize: graph must be connected");
  RecognizeCtx ctx;
  return recognize_impl(g, ctx);
}

bool recognize_oracle(const Graph& g, std::uint64_t cap) {
  if (!is_connected(g))
    throw std::invalid_argument("recognize_oracle: graph must be connected");
  bool all_match = true;
  enumerate_spanning_trees(g, cap, [&](std::span<const Edge> edges) {
    Graph t(g.order());
    for (const Edge& e : edges) t.add_edge(e.u, e.v);
    if (tree_pm_criterion(t)) return true;
    all_match = false;
    return false;
  });
  return all_match;
}

// --- certificate verification ---------------------------------------------

namespace {

struct ReplaySets {
  std::set<int> verts;
  std::set<std::pair<int, int>> edges;  // normalized (min, max)
};

std::pair<int, int> norm_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

bool graph_has(const Graph& g, int a, int b) {
  return a >= 0 && b >= 0 && a < g.order() && b < g.order() && a != b && g.has_edge(a, b);
}

VerifyStatus replay(const Graph& g, const Certificate& c, ReplaySets& out);

VerifyStatus replay_corona(const Graph& g, const CertCorona& n, ReplaySets& out) {
  if (n.host.empty() || n.pairs.size() != n.host.size())
    return VerifyStatus::kCoronaPairingNotBijection;
  std::set<int> host(n.host.begin(), n.host.end());
  if (host.size() != n.host.size()) return VerifyStatus::kCoronaPairingNotBijection;
  std::set<int> firsts, leaves;
  for (auto [h, l] : n.pairs) {
    if (host.count(l)) return VerifyStatus::kCoronaPairingNotBijection;
    firsts.insert(h);
    leaves.insert(l);
  }
  if (firsts != host || leaves.size() != n.pairs.size())
    return VerifyStatus::kCoronaPairingNotBijection;

  // host edges are read off g; the host-induced part must be connected
  const std::vector<int> hv(host.begin(), host.end());
  const int k = static_cast<int>(hv.size());
  std::vector<std::vector<int>> adj(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (graph_has(g, hv[a], hv[b])) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        out.edges.insert(norm_pair(hv[a], hv[b]));
      }
  std::vector<char> seen(k, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a])
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
  }
  if (reached != k) return VerifyStatus::kCoronaHostNotConnected;

  out.verts = host;
  for (auto [h, l] : n.pairs) {
    out.verts.insert(l);
    out.edges.insert(norm_pair(h, l));
  }
  return VerifyStatus::kOk;
}

VerifyStatus replay_glue(const Graph& g, const CertGlue& n, ReplaySets& out) {
  if (!n.left || !n.right) return VerifyStatus::kGlueMissingChild;
  if (n.virtual_id < kVirtualIdBase) return VerifyStatus::kGlueBadVirtualId;
  ReplaySets l, r;
  if (VerifyStatus s = replay(g, *n.left, l); s != VerifyStatus::kOk) return s;
  if (VerifyStatus s = replay(g, *n.right, r); s != VerifyStatus::kOk) return s;
  if (!l.verts.count(n.virtual_id) || r.verts.count(n.virtual_id))
    return VerifyStatus::kGlueBadVirtualId;
  int touching = 0;
  bool pendant_at_attach = false;
  for (const auto& e : l.edges)
    if (e.first == n.virtual_id || e.second == n.virtual_id) {
      ++touching;
      int other = e.first == n.virtual_id ? e.second : e.first;
      pendant_at_attach = other == n.attach;
    }
  if (touching != 1 || !pendant_at_attach) return VerifyStatus::kGlueVirtualNotPendant;
  if (!l.verts.count(n.attach) || !r.verts.count(n.attach))
    return VerifyStatus::kGlueAttachMissing;
  for (int x : r.verts)
    if (x != n.attach && x != n.virtual_id && l.verts.count(x))
      return VerifyStatus::kGlueOverlapNotAttachOnly;

  out.verts = r.verts;
  for (int x : l.verts)
    if (x != n.virtual_id) out.verts.insert(x);
  out.edges = r.edges;
  const auto virt_edge = norm_pair(n.attach, n.virtual_id);
  for (const auto& e : l.edges)
    if (e != virt_edge) out.edges.insert(e);
  return VerifyStatus::kOk;
}

VerifyStatus replay(const Graph& g, const Certificate& c, ReplaySets& out) {
  return std::visit(
      Overload{
          [&](const CertBaseEdge& n) {
            if (n.u == n.v) return VerifyStatus::kBaseEdgeLoop;
            out.verts = {n.u, n.v};
            out.edges = {norm_pair(n.u, n.v)};
            return VerifyStatus::kOk;
          },
          [&](const CertBaseCycle& n) {
            const auto& vs = n.vertices;
            if (vs.size() < 4) return VerifyStatus::kCycleTooShort;
            if (vs.size() % 2) return VerifyStatus::kCycleOddLength;
            std::set<int> distinct(vs.begin(), vs.end());
            if (distinct.size() != vs.size()) return VerifyStatus::kCycleRepeatedVertex;
            out.verts = std::move(distinct);
            for (std::size_t i = 0; i < vs.size(); ++i)
              out.edges.insert(norm_pair(vs[i], vs[(i + 1) % vs.size()]));
            return VerifyStatus::kOk;
          },
          [&](const CertCorona& n) { return replay_corona(g, n, out); },
          [&](const CertGlue& n) { return replay_glue(g, n, out); },
      },
      c.node);
}

}  // namespace

const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kOk: return "ok";
    case VerifyStatus::kBaseEdgeLoop: return "base-edge-loop";
    case VerifyStatus::kCycleTooShort: return "cycle-too-short";
    case VerifyStatus::kCycleOddLength: return "cycle-odd-length";
    case VerifyStatus::kCycleRepeatedVertex: return "cycle-repeated-vertex";
    case VerifyStatus::kCoronaPairingNotBijection: return "corona-pairing-not-bijection";
    case VerifyStatus::kCoronaHostNotConnected: return "corona-host-not-connected";
    case VerifyStatus::kGlueMissingChild: return "glue-missing-child";
    case VerifyStatus::kGlueBadVirtualId: return "glue-bad-virtual-id";
    case VerifyStatus::kGlueVirtualNotPendant: return "glue-virtual-not-pendant";
    case VerifyStatus::kGlueAttachMissing: return "glue-attach-missing";
    case VerifyStatus::kGlueOverlapNotAttachOnly: return "glue-overlap-not-attach-only";
    case VerifyStatus::kVertexSetMismatch: return "vertex-set-mismatch";
    case VerifyStatus::kEdgeSetMismatch: return "edge-set-mismatch";
  }
  return "?";
}

VerifyResult verify_certificate(const Graph& g, const Certificate& c) {
  ReplaySets s;
  VerifyStatus st = replay(g, c, s);
  if (st != VerifyStatus::kOk) return {false, st};
  std::set<int> want_v;
  for (int v = 0; v < g.order(); ++v) want_v.insert(v);
  if (s.verts != want_v) return {false, VerifyStatus::kVertexSetMismatch};
  std::set<std::pair<int, int>> want_e;
  for (const Edge& e : g.edges()) want_e.insert({e.u, e.v});
  if (s.edges != want_e) return {false, VerifyStatus::kEdgeSetMismatch};
  return {true, VerifyStatus::kOk};
}

// --- composition and lifting ------------------------------------------------

Graph pendant_replace(const Graph& g, int v, const Graph& f, int w) {
  if (v < 0 || v >= g.order() || g.degree(v) != 1)
    throw std::invalid_argument("pendant_replace: v must be a pendant vertex of g");
  if (w < 0 || w >= f.order())
    throw std::invalid_argument("pendant_replace: w is outside f");
  const int total = (g.order() - 1) + (f.order() - 1);
  if (total > Graph::kMaxVertices)
    throw std::invalid_argument("pendant_replace: result would exceed 64 vertices");
  const int u = lowest_vertex(g.neighbors(v));

  std::vector<int> gmap(g.order(), -1);
  int next = 0;
  for (int x = 0; x < g.order(); ++x)
    if (x != v) gmap[x] = next++;
  std::vector<int> fmap(f.order(), -1);
  for (int x = 0; x < f.order(); ++x) fmap[x] = x == w ? gmap[u] : next++;

  Graph out(total);
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) out.add_edge(gmap[e.u], gmap[e.v]);
  for (const Edge& e : f.edges()) out.add_edge(fmap[e.u], fmap[e.v]);
  return out;
}

Witness lift_witness(const Graph& parent, const Witness& part, LiftSide side, int attach) {
  if (attach < 0 || attach >= parent.order())
    throw std::invalid_argument("lift_witness: attach vertex outside the parent graph");
  if (part.tree.empty()) throw std::invalid_argument("lift_witness: empty part witness");

  VertexMask real = 0;
  std::vector<int> virtuals;
  for (const Edge& e : part.tree)
    for (int x : {e.u, e.v}) {
      if (x >= kVirtualIdBase) {
        if (std::find(virtuals.begin(), virtuals.end(), x) == virtuals.end())
          virtuals.push_back(x);
      } else if (x < 0 || x >= parent.order()) {
        throw std::invalid_argument("lift_witness: part tree vertex outside the parent graph");
      } else {
        real |= vbit(x);
      }
    }

  std::vector<Edge> kept = part.tree;
  if (side == LiftSide::kLeft) {
    if (virtuals.size() != 1)
      throw std::invalid_argument("lift_witness: left witness needs exactly one virtual pendant");
    const int virt = virtuals[0];
    int at = -1;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (kept[i].u == virt || kept[i].v == virt) {
        if (at != -1)
          throw std::invalid_argument("lift_witness: virtual pendant has several edges");
        at = static_cast<int>(i);
        int other = kept[i].u == virt ? kept[i].v : kept[i].u;
        if (other != attach)
          throw std::invalid_argument("lift_witness: virtual pendant not hung on the attach vertex");
      }
    kept.erase(kept.begin() + at);
  } else if (!virtuals.empty()) {
    throw std::invalid_argument("lift_witness: right witness must not contain virtual vertices");
  }
  if (!(real & vbit(attach)))
    throw std::invalid_argument("lift_witness: attach vertex missing from the part tree");

  const VertexMask rest = (parent.vertices() & ~real) | vbit(attach);
  std::vector<int> ids;
  const Graph other_side = parent.induced(rest, &ids);
  if (!is_connected(other_side))
    throw std::invalid_argument("lift_witness: complement side is not connected");
  const Graph other_tree = any_spanning_tree(other_side);

  Graph t(parent.order());
  for (const Edge& e : kept) {
    if (!parent.has_edge(e.u, e.v))
      throw std::invalid_argument("lift_witness: part tree edge missing from the parent");
    t.add_edge(e.u, e.v);
  }
  for (const Edge& e : other_tree.edges()) t.add_edge(ids[e.u], ids[e.v]);
  if (!is_tree(t))
    throw std::invalid_argument("lift_witness: lifted edges do not form a spanning tree");

  Witness out;
  out.tree = t.edges();
  if (parent.order() % 2 == 1) {
    out.odd_order = true;
    return out;
  }
  auto bad = find_bad_vertex(t);
  if (!bad)
    throw std::invalid_argument("lift_witness: lifted tree has a perfect matching");
  out.bad_vertex = *bad;
  return out;
}

// --- samplers ----------------------------------------------------------------

namespace {

Graph sample_member_rec(int half, Rng& rng) {
  if (half == 1) return gen_complete(2);
  if (rng.next(3) == 0) return gen_cycle(2 * half);
  // compose smaller members onto a random connected host
  const int p = 2 + rng.next_int(half - 1);
  std::vector<int> sizes(p, 1);
  for (int extra = half - p; extra > 0; --extra) sizes[rng.next_int(p)] += 1;
  const Graph host = random_connected_graph(p, rng);
  std::vector<Attachment> parts;
  parts.reserve(p);
  for (int i = 0; i < p; ++i) {
    Graph f = sample_member_rec(sizes[i], rng);
    int at = rng.next_int(f.order());
    parts.push_back({std::move(f), at});
  }
  return compose(host, parts).graph;
}

Graph sample_pm_tree_rec(int half, Rng& rng) {
  if (half == 1) return gen_complete(2);
  const int lhalf = 1 + rng.next_int(half - 1);
  const Graph a = sample_pm_tree_rec(lhalf, rng);
  const Graph b = sample_pm_tree_rec(half - lhalf, rng);
  Graph t(a.order() + b.order());
  for (const Edge& e : a.edges()) t.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) t.add_edge(a.order() + e.u, a.order() + e.v);
  t.add_edge(rng.next_int(a.order()), a.order() + rng.next_int(b.order()));
  return t;
}

}  // namespace

Graph sample_member(int half_order, std::uint64_t seed) {
  if (half_order < 1 || 2 * half_order > Graph::kMaxVertices)
    throw std::invalid_argument("sample_member: half order must be in [1, 32]");
  Rng rng(seed);
  return sample_member_rec(half_order, rng);
}

Graph sample_pm_tree(int half_order, std::uint64_t seed) {
  if (half_order < 1 || 2 * half_order > Graph::kMaxVertices)
    throw std::invalid_argument("sample_pm_tree: half order must be in [1, 32]");
  Rng rng(seed);
  return sample_pm_tree_rec(half_order, rng);
}

}  // namespace akgraph

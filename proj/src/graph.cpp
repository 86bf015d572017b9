#include "akgraph/graph.hpp"

#include <algorithm>
#include <sstream>

namespace akgraph {

std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

VertexMask mask_of(std::initializer_list<int> vs) {
  VertexMask m = 0;
  for (int v : vs) m |= vbit(v);
  return m;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    VertexMask higher = adj_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::induced(VertexMask keep, std::vector<int>* old_ids) const {
  if (keep & ~vertices())
    throw std::invalid_argument("Graph::induced: mask has vertices outside the graph");
  std::vector<int> ids = mask_vertices(keep);
  Graph out(static_cast<int>(ids.size()));
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if (adj_[ids[a]] & vbit(ids[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
  if (old_ids) *old_ids = std::move(ids);
  return out;
}

// --- graph6 -------------------------------------------------------------

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("graph6: empty input");
  for (char c : line)
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of printable range");
  if (line[0] == '~') throw ParseError("graph6: long form (order > 62) not supported");
  const int n = line[0] - 63;  // 0..62 after the '~' check
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() < 1 + nbytes) throw ParseError("graph6: truncated edge bits");
  if (line.size() > 1 + nbytes) throw ParseError("graph6: trailing bytes");
  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  if (nbits % 6 != 0) {
    int last = line.back() - 63;
    int pad = static_cast<int>(6 - nbits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("encode_graph6: order > 62 needs the long form");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | static_cast<int>(g.has_edge(u, v));
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: expected 'n m' header");
  if (n < 0 || n > Graph::kMaxVertices) throw ParseError("edge list: order out of range");
  if (m < 0) throw ParseError("edge list: negative edge count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: fewer edges than the header claims");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge list: vertex out of range");
    if (u == v) throw ParseError("edge list: loop edge");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("edge list: duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string tail;
  if (in >> tail) throw ParseError("edge list: trailing tokens after the last edge");
  return g;
}

// --- connectivity -------------------------------------------------------

std::vector<VertexMask> components_within(const Graph& g, VertexMask active) {
  if (active & ~g.vertices())
    throw std::invalid_argument("components_within: mask has vertices outside the graph");
  std::vector<VertexMask> out;
  VertexMask todo = active;
  while (todo) {
    VertexMask comp = vbit(lowest_vertex(todo));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      VertexMask f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(v) & active;
      }
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

std::vector<VertexMask> components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected_within(const Graph& g, VertexMask active) {
  if (active == 0) return false;
  VertexMask comp = vbit(lowest_vertex(active));
  VertexMask frontier = comp;
  while (frontier) {
    VertexMask next = 0;
    VertexMask f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v) & active;
    }
    next &= ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == active;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return is_connected_within(g, g.vertices());
}

int odd_component_count(const Graph& g, VertexMask removed) {
  if (removed & ~g.vertices())
    throw std::invalid_argument("odd_component_count: mask has vertices outside the graph");
  int odd = 0;
  for (VertexMask comp : components_within(g, g.vertices() & ~removed))
    if (std::popcount(comp) % 2 == 1) ++odd;
  return odd;
}

VertexMask cut_vertices(const Graph& g) {
  const auto base = components(g).size();
  VertexMask cut = 0;
  for (int v = 0; v < g.order(); ++v)
    if (components_within(g, g.vertices() & ~vbit(v)).size() > base) cut |= vbit(v);
  return cut;
}

bool is_nonseparable(const Graph& g) {
  return is_connected(g) && cut_vertices(g) == 0;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g) == 0;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

namespace {

struct BlockDfs {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<VertexMask>& blocks;
  int timer = 0;

  void run(int u, int parent) {
    disc[u] = low[u] = timer++;
    VertexMask nb = g.neighbors(u);
    bool parent_skipped = false;
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (v == parent && !parent_skipped) {
        parent_skipped = true;  // simple graph: exactly one edge back to the parent
        continue;
      }
      if (disc[v] == -1) {
        stack.emplace_back(u, v);
        run(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          VertexMask block = 0;
          std::pair<int, int> top;
          do {
            top = stack.back();
            stack.pop_back();
            block |= vbit(top.first) | vbit(top.second);
          } while (top != std::pair{u, v});
          blocks.push_back(block);
        }
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

BlockCutDecomposition block_cut_decomposition(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("block_cut_decomposition: graph must be connected");
  BlockCutDecomposition out;
  out.blocks_of_vertex.resize(g.order());
  if (g.order() == 1) {
    out.blocks.push_back(vbit(0));
    out.blocks_of_vertex[0].push_back(0);
    return out;
  }
  BlockDfs dfs{g, std::vector<int>(g.order(), -1), std::vector<int>(g.order(), 0), {}, out.blocks};
  dfs.run(0, -1);
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (int v : mask_vertices(out.blocks[b])) out.blocks_of_vertex[v].push_back(static_cast<int>(b));
  for (int v = 0; v < g.order(); ++v)
    if (out.blocks_of_vertex[v].size() >= 2) out.cut_vertices |= vbit(v);
  return out;
}

// --- generators ----------------------------------------------------------

Graph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("gen_complete: order must be positive");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: order must be at least 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("gen_path: order must be positive");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph corona(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("corona: base graph must be nonempty");
  if (2 * n > Graph::kMaxVertices)
    throw std::invalid_argument("corona: result would exceed 64 vertices");
  Graph out(2 * n);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v) out.add_edge(v, n + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  const int n = g.order(), k = h.order();
  if (n + k > Graph::kMaxVertices)
    throw std::invalid_argument("join: result would exceed 64 vertices");
  Graph out(n + k);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(n + e.u, n + e.v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < k; ++v) out.add_edge(u, n + v);
  return out;
}

ComposeResult compose(const Graph& host, const std::vector<Attachment>& parts) {
  const int p = host.order();
  if (p < 2) throw std::invalid_argument("compose: host must have at least two vertices");
  if (!is_connected(host)) throw std::invalid_argument("compose: host must be connected");
  if (static_cast<int>(parts.size()) != p)
    throw std::invalid_argument("compose: need exactly one attachment per host vertex");
  int total = p;
  for (const Attachment& a : parts) {
    if (a.part.order() < 1) throw std::invalid_argument("compose: empty attachment part");
    if (a.vertex < 0 || a.vertex >= a.part.order())
      throw std::invalid_argument("compose: attach vertex outside its part");
    total += a.part.order() - 1;
  }
  if (total > Graph::kMaxVertices)
    throw std::invalid_argument("compose: result would exceed 64 vertices");

  ComposeResult out{Graph(total), {}};
  out.part_vertex_map.resize(p);
  int next = p;
  for (int i = 0; i < p; ++i) {
    const Attachment& a = parts[i];
    auto& map = out.part_vertex_map[i];
    map.resize(a.part.order());
    for (int w = 0; w < a.part.order(); ++w) map[w] = (w == a.vertex) ? i : next++;
  }
  for (const Edge& e : host.edges()) out.graph.add_edge(e.u, e.v);
  for (int i = 0; i < p; ++i)
    for (const Edge& e : parts[i].part.edges())
      out.graph.add_edge(out.part_vertex_map[i][e.u], out.part_vertex_map[i][e.v]);
  return out;
}

// --- isomorphism -----------------------------------------------------------

namespace {

bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map,
                    VertexMask used, int next) {
  const int n = g.order();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used & vbit(cand)) continue;
    if (g.degree(next) != h.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (g.has_edge(prev, next) != h.has_edge(map[prev], cand)) ok = false;
    if (!ok) continue;
    map[next] = cand;
    if (extend_mapping(g, h, map, used | vbit(cand), next + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > 10 || h.order() > 10)
    throw std::invalid_argument("is_isomorphic: supported only up to order 10");
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> map(g.order(), -1);
  return extend_mapping(g, h, map, 0, 0);
}

}  // namespace akgraph

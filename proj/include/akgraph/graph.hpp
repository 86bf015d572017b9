#ifndef AKGRAPH_GRAPH_HPP
#define AKGRAPH_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace akgraph {

/// Set of vertices as a bitmask. Vertex ids are dense integers 0..n-1 and
/// the whole library caps graphs at 64 vertices, so one word is enough.
using VertexMask = std::uint64_t;

constexpr VertexMask vbit(int v) { return VertexMask{1} << v; }

constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int mask_size(VertexMask m) { return std::popcount(m); }

inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }

std::vector<int> mask_vertices(VertexMask m);

VertexMask mask_of(std::initializer_list<int> vs);

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
/// Adjacency is one bitmask per vertex; all operations on the graph treat it
/// as immutable once built, so values are safe to share across threads.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: order must be in [0, 64]");
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [a, b] : es) g.add_edge(a, b);
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }

  VertexMask vertices() const { return full_mask(n_); }
  VertexMask neighbors(int v) const { check_vertex(v); return adj_[v]; }
  int degree(int v) const { check_vertex(v); return std::popcount(adj_[v]); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & vbit(v)) != 0;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    if (adj_[u] & vbit(v)) throw std::invalid_argument("Graph: duplicate edge");
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
    ++m_;
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("Graph: no such edge");
    adj_[u] &= ~vbit(v);
    adj_[v] &= ~vbit(u);
    --m_;
  }

  /// Edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep`, relabeled densely in ascending vertex order.
  /// If `old_ids` is given it receives the new-id -> old-id map.
  Graph induced(VertexMask keep, std::vector<int>* old_ids = nullptr) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  }

  int n_ = 0;
  int m_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

// --- codecs -----------------------------------------------------------

/// Decode one graph6 line (short form, order <= 62). Header byte is n+63,
/// followed by the upper triangle in column-major order, 6 bits per byte,
/// each byte offset by 63. Long-form input ('~' header) is rejected.
Graph parse_graph6(std::string_view line);

/// Encode in graph6 short form; throws for order > 62.
std::string encode_graph6(const Graph& g);

/// Parse "n m" followed by m "u v" pairs (whitespace separated).
Graph parse_edge_list(std::string_view text);

// --- connectivity & blocks --------------------------------------------

/// Connected components as vertex masks, ordered by smallest contained vertex.
std::vector<VertexMask> components(const Graph& g);

/// Components of the subgraph induced on `active`.
std::vector<VertexMask> components_within(const Graph& g, VertexMask active);

bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, VertexMask active);

/// Number of odd-order components of g - removed.
int odd_component_count(const Graph& g, VertexMask removed);

/// Vertices whose removal increases the component count.
VertexMask cut_vertices(const Graph& g);

/// Connected with no cut vertex (K1 and K2 qualify).
bool is_nonseparable(const Graph& g);

/// Connected, order >= 3, no cut vertex.
bool is_two_connected(const Graph& g);

/// Connected and 2-regular: a single cycle through every vertex.
bool is_cycle_graph(const Graph& g);

struct BlockCutDecomposition {
  std::vector<VertexMask> blocks;            // maximal nonseparable pieces
  VertexMask cut_vertices = 0;
  std::vector<std::vector<int>> blocks_of_vertex;  // indexed by vertex id
};

/// Blocks and cut vertices of a connected graph (edge-disjoint blocks; a
/// vertex is a cut vertex iff it lies in >= 2 blocks).
BlockCutDecomposition block_cut_decomposition(const Graph& g);

// --- generators --------------------------------------------------------

Graph gen_complete(int n);
Graph gen_cycle(int n);
Graph gen_path(int n);

/// Corona g∘K1: one new pendant per vertex; the pendant of vertex i is n+i.
Graph corona(const Graph& g);

/// Join: disjoint union plus all edges between the two sides; h's vertices
/// are relabeled to |g|..|g|+|h|-1.
Graph join(const Graph& g, const Graph& h);

struct Attachment {
  Graph part;
  int vertex = 0;  // the vertex of `part` fused onto the host vertex
};

struct ComposeResult {
  Graph graph;
  /// part_vertex_map[i][w] = new id of part i's vertex w (attach vertex maps
  /// to host vertex i).
  std::vector<std::vector<int>> part_vertex_map;
};

/// Fuse one attachment onto each host vertex: host vertices keep ids 0..p-1,
/// then the non-attach vertices of each part follow in order.
ComposeResult compose(const Graph& host, const std::vector<Attachment>& parts);

/// Backtracking isomorphism test with degree pruning; orders capped at 10.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace akgraph

#endif  // AKGRAPH_GRAPH_HPP

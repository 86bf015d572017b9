#ifndef AKGRAPH_MATCHING_HPP
#define AKGRAPH_MATCHING_HPP

#include <optional>
#include <vector>

#include "akgraph/graph.hpp"

namespace akgraph {

struct Matching {
  std::vector<Edge> edges;   // ascending (u, v)
  VertexMask covered = 0;

  int size() const { return static_cast<int>(edges.size()); }
  bool covers(const Graph& g) const { return covered == g.vertices(); }
};

/// Maximum matching via Edmonds' blossom algorithm.
Matching maximum_matching(const Graph& g);

/// True iff a matching covers every vertex. Always false for odd order.
bool has_perfect_matching(const Graph& g);

/// A set s with more odd components in g - s than |s| vertices.
struct TutteWitness {
  VertexMask s = 0;
  int odd_components = 0;
};

/// For a graph with no perfect matching, the smallest Tutte violator
/// (ties broken by lexicographic vertex list). Returns nullopt when a
/// perfect matching exists. Orders above 20 are rejected: the search
/// enumerates vertex subsets.
std::optional<TutteWitness> tutte_witness(const Graph& g);

/// Role of an edge across all perfect matchings of g.
enum class EdgeClass {
  kFixedDouble,        // in every perfect matching
  kFixedSingle,        // in no perfect matching
  kFree,               // in some but not all
  kNoPerfectMatching,  // g has no perfect matching at all
};

const char* to_string(EdgeClass c);

EdgeClass classify_edge(const Graph& g, Edge e);

}  // namespace akgraph

#endif  // AKGRAPH_MATCHING_HPP

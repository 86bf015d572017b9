#ifndef AKGRAPH_SCAN_HPP
#define AKGRAPH_SCAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "akgraph/graph.hpp"

namespace akgraph::scan {

/// Labeled graph of order n from the C(n,2) vertex-pair bits, bit k of
/// `bits` being pair k in the (1,0), (2,0), (2,1), (3,0), ... order. Every
/// bits value in [0, 2^C(n,2)) is a distinct labeled graph, which makes a
/// plain integer range an exhaustive sweep.
Graph graph_from_pair_bits(int n, std::uint64_t bits);

/// Exhaustive sweep of recognize over the connected graphs of one order,
/// cross-checking every verdict: certificates must replay, witness trees
/// must be spanning trees failing the matching criterion, and optionally
/// every verdict is compared against the spanning-tree oracle.
struct RecognitionScan {
  std::uint64_t connected = 0;
  std::uint64_t members = 0;
  std::uint64_t verified_certificates = 0;
  std::uint64_t valid_witnesses = 0;
  std::uint64_t oracle_mismatches = 0;
  bool operator==(const RecognitionScan&) const = default;
};

RecognitionScan recognition_scan_serial(int order, bool with_oracle);
RecognitionScan recognition_scan_parallel(int order, bool with_oracle);

/// Matching decisions cross-checked against the odd-component condition
/// evaluated by full vertex-subset enumeration, over all labeled graphs
/// (connected or not) of one order, or over a seeded sample.
struct TutteScan {
  std::uint64_t graphs = 0;
  std::uint64_t with_matching = 0;
  std::uint64_t mismatches = 0;
  bool operator==(const TutteScan&) const = default;
};

TutteScan tutte_exhaustive_serial(int order);
TutteScan tutte_exhaustive_parallel(int order);

/// `samples` graphs, each drawn by seeding a fresh generator from (seed,
/// sample index), with order uniform in [1, max_order]: the result does not
/// depend on how the sample range is split across threads.
TutteScan tutte_sampled_serial(int max_order, std::uint64_t samples, std::uint64_t seed);
TutteScan tutte_sampled_parallel(int max_order, std::uint64_t samples, std::uint64_t seed);

/// Spanning-tree witness construction over every 2-connected non-cycle
/// graph of one order: each constructed tree must be a spanning tree with
/// no perfect matching. Each eligible graph's minimally 2-connected
/// spanning subgraph that is not a cycle also has its structural
/// decomposition exercised, so the decomposition's internal checks run
/// across the whole class (they throw logic_error on violation rather than
/// being counted).
struct WitnessTreeScan {
  std::uint64_t eligible = 0;
  std::uint64_t valid_trees = 0;
  std::uint64_t failures = 0;
  std::uint64_t structures_checked = 0;
  bool operator==(const WitnessTreeScan&) const = default;
};

WitnessTreeScan witness_tree_scan_serial(int order);
WitnessTreeScan witness_tree_scan_parallel(int order);

/// Exhaustive maximum-size search over the members of order 2·half_order,
/// recording one representative per isomorphism class of the winners (the
/// lexicographically earliest encountered, graph6-encoded). Rejects
/// half_order > 3, where the sweep stops being desk scale.
struct ExtremalScan {
  int max_size = -1;
  std::uint64_t members = 0;
  std::vector<std::string> argmax_graph6;
  bool operator==(const ExtremalScan&) const = default;
};

ExtremalScan extremal_scan_serial(int half_order);
ExtremalScan extremal_scan_parallel(int half_order);

}  // namespace akgraph::scan

#endif  // AKGRAPH_SCAN_HPP

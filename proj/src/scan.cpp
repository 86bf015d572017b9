#include "akgraph/scan.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "akgraph/graph.hpp"
#include "akgraph/kekule.hpp"
#include "akgraph/matching.hpp"
#include "akgraph/rng.hpp"
#include "akgraph/spanning.hpp"

namespace akgraph::scan {

namespace {

// Fixed chunk count: the merge order is the chunk order, so results are
// identical whether chunks run on one thread or many.
constexpr std::uint64_t kChunks = 256;

std::uint64_t pair_count_bits(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// Per-sample seed derivation: element i of the splitmix64 stream starting
// at `seed`. Sample i's stream depends only on (seed, i), never on which
// thread drew the previous sample. The additive odd stride matters: xoring
// the counter into the seed instead would let nearby seeds reproduce each
// other's sample sets in permuted order, with identical aggregate tallies.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Run `work(lo, hi)` over [0, total) in kChunks pieces and fold the chunk
// results in ascending chunk order.
template <typename Partial, typename Work, typename Merge>
Partial chunked(std::uint64_t total, Work&& work, Merge&& merge) {
  const std::uint64_t chunks = total < kChunks ? (total == 0 ? 1 : total) : kChunks;
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::vector<Partial> parts(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * step;
    const std::uint64_t hi = lo + step < total ? lo + step : total;
    if (lo < hi) parts[static_cast<std::size_t>(c)] = work(lo, hi);
  }
  Partial acc;
  for (Partial& p : parts) merge(acc, p);
  return acc;
}

// --- per-graph workers shared by the serial and parallel drivers ----------

bool witness_is_valid(const Graph& g, const Witness& w) {
  Graph t(g.order());
  for (const Edge& e : w.tree) {
    if (!g.has_edge(e.u, e.v)) return false;
    t.add_edge(e.u, e.v);
  }
  return is_tree(t) && !tree_pm_criterion(t);
}

void recognition_one(const Graph& g, bool with_oracle, RecognitionScan& out) {
  ++out.connected;
  RecognizeResult r = recognize(g);
  if (with_oracle && r.member != recognize_oracle(g)) ++out.oracle_mismatches;
  if (r.member) {
    ++out.members;
    if (r.certificate && verify_certificate(g, *r.certificate))
      ++out.verified_certificates;
  } else if (r.witness && witness_is_valid(g, *r.witness)) {
    ++out.valid_witnesses;
  }
}

void tutte_one(const Graph& g, TutteScan& out) {
  ++out.graphs;
  const bool pm = has_perfect_matching(g);
  bool condition = true;
  const VertexMask all = g.vertices();
  for (VertexMask s = 0;; s = (s - all) & all) {
    if (odd_component_count(g, s) > mask_size(s)) {
      condition = false;
      break;
    }
    if (s == all) break;
  }
  out.with_matching += pm ? 1 : 0;
  out.mismatches += pm != condition ? 1 : 0;
}

void witness_tree_one(const Graph& g, WitnessTreeScan& out) {
  ++out.eligible;
  Graph t = unmatchable_spanning_tree(g);
  bool spanning = t.order() == g.order() && is_tree(t);
  if (spanning)
    for (int v = 0; v < t.order() && spanning; ++v)
      if ((t.neighbors(v) & ~g.neighbors(v)) != 0) spanning = false;
  if (spanning && !tree_pm_criterion(t))
    ++out.valid_trees;
  else
    ++out.failures;
  Graph h = minimally_2connected_spanning(g);
  if (!is_cycle_graph(h)) {
    bollobas_structure(h);  // logic_error propagates on a structural violation
    ++out.structures_checked;
  }
}

struct ExtremalPartial {
  int max_size = -1;
  std::uint64_t members = 0;
  std::vector<Graph> argmax;
};

void extremal_one(const Graph& g, ExtremalPartial& out) {
  if (!recognize(g).member) return;
  ++out.members;
  if (g.size() < out.max_size) return;
  if (g.size() > out.max_size) {
    out.max_size = g.size();
    out.argmax.clear();
  }
  for (const Graph& seen : out.argmax)
    if (is_isomorphic(g, seen)) return;
  out.argmax.push_back(g);
}

void extremal_merge(ExtremalPartial& acc, ExtremalPartial& part) {
  acc.members += part.members;
  if (part.max_size < acc.max_size) return;
  if (part.max_size > acc.max_size) {
    acc.max_size = part.max_size;
    acc.argmax.clear();
  }
  for (Graph& g : part.argmax) {
    bool fresh = true;
    for (const Graph& seen : acc.argmax)
      if (is_isomorphic(g, seen)) {
        fresh = false;
        break;
      }
    if (fresh) acc.argmax.push_back(std::move(g));
  }
}

// --- range drivers ---------------------------------------------------------

void check_scan_order(int order, const char* who) {
  if (order < 1 || order > 8)
    throw std::invalid_argument(std::string(who) + ": order must be in [1, 8]");
}

RecognitionScan recognition_range(int order, bool with_oracle, std::uint64_t lo,
                                  std::uint64_t hi) {
  RecognitionScan out;
  for (std::uint64_t bits = lo; bits < hi; ++bits) {
    Graph g = graph_from_pair_bits(order, bits);
    if (is_connected(g)) recognition_one(g, with_oracle, out);
  }
  return out;
}

TutteScan tutte_range(int order, std::uint64_t lo, std::uint64_t hi) {
  TutteScan out;
  for (std::uint64_t bits = lo; bits < hi; ++bits)
    tutte_one(graph_from_pair_bits(order, bits), out);
  return out;
}

TutteScan tutte_sample_range(int max_order, std::uint64_t seed, std::uint64_t lo,
                             std::uint64_t hi) {
  TutteScan out;
  for (std::uint64_t i = lo; i < hi; ++i) {
    Rng rng(mix_seed(seed, i));
    const int n = 1 + rng.next_int(max_order);
    tutte_one(random_graph(n, rng), out);
  }
  return out;
}

WitnessTreeScan witness_range(int order, std::uint64_t lo, std::uint64_t hi) {
  WitnessTreeScan out;
  for (std::uint64_t bits = lo; bits < hi; ++bits) {
    Graph g = graph_from_pair_bits(order, bits);
    if (is_two_connected(g) && !is_cycle_graph(g)) witness_tree_one(g, out);
  }
  return out;
}

ExtremalPartial extremal_range(int order, std::uint64_t lo, std::uint64_t hi) {
  ExtremalPartial out;
  for (std::uint64_t bits = lo; bits < hi; ++bits) {
    Graph g = graph_from_pair_bits(order, bits);
    if (is_connected(g)) extremal_one(g, out);
  }
  return out;
}

void add_counts(RecognitionScan& acc, const RecognitionScan& p) {
  acc.connected += p.connected;
  acc.members += p.members;
  acc.verified_certificates += p.verified_certificates;
  acc.valid_witnesses += p.valid_witnesses;
  acc.oracle_mismatches += p.oracle_mismatches;
}

void add_counts(TutteScan& acc, const TutteScan& p) {
  acc.graphs += p.graphs;
  acc.with_matching += p.with_matching;
  acc.mismatches += p.mismatches;
}

void add_counts(WitnessTreeScan& acc, const WitnessTreeScan& p) {
  acc.eligible += p.eligible;
  acc.valid_trees += p.valid_trees;
  acc.failures += p.failures;
  acc.structures_checked += p.structures_checked;
}

int check_half_order(int half_order) {
  if (half_order < 1 || half_order > 3)
    throw std::invalid_argument("extremal_scan: half_order must be in [1, 3]");
  return 2 * half_order;
}

ExtremalScan finish_extremal(ExtremalPartial&& p) {
  ExtremalScan out;
  out.max_size = p.max_size;
  out.members = p.members;
  out.argmax_graph6.reserve(p.argmax.size());
  for (const Graph& g : p.argmax) out.argmax_graph6.push_back(encode_graph6(g));
  return out;
}

}  // namespace

Graph graph_from_pair_bits(int n, std::uint64_t bits) {
  if (n < 1 || n > 11)
    throw std::invalid_argument("graph_from_pair_bits: need 1 <= n <= 11 so pairs fit in 64 bits");
  Graph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((bits >> k) & 1) g.add_edge(u, v);
  return g;
}

RecognitionScan recognition_scan_serial(int order, bool with_oracle) {
  check_scan_order(order, "recognition_scan");
  return recognition_range(order, with_oracle, 0, pair_count_bits(order));
}

RecognitionScan recognition_scan_parallel(int order, bool with_oracle) {
  check_scan_order(order, "recognition_scan");
  return chunked<RecognitionScan>(
      pair_count_bits(order),
      [&](std::uint64_t lo, std::uint64_t hi) {
        return recognition_range(order, with_oracle, lo, hi);
      },
      [](RecognitionScan& acc, const RecognitionScan& p) { add_counts(acc, p); });
}

TutteScan tutte_exhaustive_serial(int order) {
  check_scan_order(order, "tutte_exhaustive");
  return tutte_range(order, 0, pair_count_bits(order));
}

TutteScan tutte_exhaustive_parallel(int order) {
  check_scan_order(order, "tutte_exhaustive");
  return chunked<TutteScan>(
      pair_count_bits(order),
      [&](std::uint64_t lo, std::uint64_t hi) { return tutte_range(order, lo, hi); },
      [](TutteScan& acc, const TutteScan& p) { add_counts(acc, p); });
}

TutteScan tutte_sampled_serial(int max_order, std::uint64_t samples, std::uint64_t seed) {
  check_scan_order(max_order, "tutte_sampled");
  return tutte_sample_range(max_order, seed, 0, samples);
}

TutteScan tutte_sampled_parallel(int max_order, std::uint64_t samples, std::uint64_t seed) {
  check_scan_order(max_order, "tutte_sampled");
  return chunked<TutteScan>(
      samples,
      [&](std::uint64_t lo, std::uint64_t hi) {
        return tutte_sample_range(max_order, seed, lo, hi);
      },
      [](TutteScan& acc, const TutteScan& p) { add_counts(acc, p); });
}

WitnessTreeScan witness_tree_scan_serial(int order) {
  check_scan_order(order, "witness_tree_scan");
  return witness_range(order, 0, pair_count_bits(order));
}

WitnessTreeScan witness_tree_scan_parallel(int order) {
  check_scan_order(order, "witness_tree_scan");
  return chunked<WitnessTreeScan>(
      pair_count_bits(order),
      [&](std::uint64_t lo, std::uint64_t hi) { return witness_range(order, lo, hi); },
      [](WitnessTreeScan& acc, const WitnessTreeScan& p) { add_counts(acc, p); });
}

ExtremalScan extremal_scan_serial(int half_order) {
  const int order = check_half_order(half_order);
  return finish_extremal(extremal_range(order, 0, pair_count_bits(order)));
}

ExtremalScan extremal_scan_parallel(int half_order) {
  const int order = check_half_order(half_order);
  ExtremalPartial acc = chunked<ExtremalPartial>(
      pair_count_bits(order),
      [&](std::uint64_t lo, std::uint64_t hi) { return extremal_range(order, lo, hi); },
      [](ExtremalPartial& a, ExtremalPartial& p) { extremal_merge(a, p); });
  return finish_extremal(std::move(acc));
}

}  // namespace akgraph::scan

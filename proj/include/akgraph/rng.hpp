#ifndef AKGRAPH_RNG_HPP
#define AKGRAPH_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "akgraph/graph.hpp"

namespace akgraph {

/// Seeded RNG with a platform-independent stream. mt19937_64 output is
/// specified bit for bit; the bound mapping here is ours, so nothing depends
/// on the standard library's implementation-defined distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t next(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next: zero bound");
    if ((bound & (bound - 1)) == 0) return gen_() & (bound - 1);
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    for (;;) {
      std::uint64_t r = gen_();
      if (r < limit) return r % bound;
    }
  }

  int next_int(int bound) { return static_cast<int>(next(static_cast<std::uint64_t>(bound))); }

  bool coin() { return (gen_() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

/// Erdos–Renyi G(n, 1/2) sample.
inline Graph random_graph(int n, Rng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng.coin()) g.add_edge(u, v);
  return g;
}

/// G(n, 1/2) conditioned on connectivity (resamples until connected).
inline Graph random_connected_graph(int n, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, rng);
    if (is_connected(g)) return g;
  }
}

}  // namespace akgraph

#endif  // AKGRAPH_RNG_HPP

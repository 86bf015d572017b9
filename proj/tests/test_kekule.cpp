#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "akgraph/graph.hpp"
#include "akgraph/kekule.hpp"
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

// a witness must be a spanning tree of g whose matching demonstrably fails
void check_witness(const Graph& g, const Witness& w) {
  Graph t(g.order());
  for (const Edge& e : w.tree) {
    REQUIRE(g.has_edge(e.u, e.v));
    t.add_edge(e.u, e.v);
  }
  REQUIRE(is_tree(t));
  if (g.order() % 2 == 1) {
    CHECK(w.odd_order);
    CHECK_FALSE(w.bad_vertex.has_value());
  } else {
    CHECK_FALSE(w.odd_order);
    REQUIRE(w.bad_vertex.has_value());
    CHECK(odd_component_count(t, vbit(*w.bad_vertex)) >= 3);
    CHECK_FALSE(tree_pm_criterion(t));
  }
}

// structural promises beyond replay: glue nodes carry fresh virtual ids
void check_certificate_shape(const Certificate& c) {
  if (const auto* gl = std::get_if<CertGlue>(&c.node)) {
    CHECK(gl->virtual_id >= kVirtualIdBase);
    REQUIRE(gl->left);
    REQUIRE(gl->right);
    check_certificate_shape(*gl->left);
    check_certificate_shape(*gl->right);
  }
}

Certificate corona_cert(std::vector<int> host, std::vector<std::pair<int, int>> pairs) {
  CertCorona c;
  c.host = std::move(host);
  c.pairs = std::move(pairs);
  return Certificate{std::move(c)};
}

Certificate glue_cert(int attach, int virtual_id, Certificate left, Certificate right) {
  CertGlue g;
  g.attach = attach;
  g.virtual_id = virtual_id;
  g.left = std::make_unique<Certificate>(std::move(left));
  g.right = std::make_unique<Certificate>(std::move(right));
  return Certificate{std::move(g)};
}

}  // namespace

TEST_SUITE("kekule") {

TEST_CASE("recognize agrees with the all-spanning-trees oracle on every connected graph up to order 6") {
  // also exercises every internal assertion: any unexpected case throws and
  // fails the test, so the cut-vertex odd-component dichotomy is covered too
  int members = 0, non_members = 0;
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t top = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < top; ++bits) {
      Graph g = graph_from_pair_bits(n, bits);
      if (!is_connected(g)) continue;
      RecognizeResult r = recognize(g);
      CHECK(r.member == recognize_oracle(g));
      if (r.member) {
        ++members;
        REQUIRE(r.certificate.has_value());
        CHECK_FALSE(r.witness.has_value());
        check_certificate_shape(*r.certificate);
        VerifyResult v = verify_certificate(g, *r.certificate);
        CHECK(v.ok);
        CHECK(v.status == VerifyStatus::kOk);
      } else {
        ++non_members;
        REQUIRE(r.witness.has_value());
        CHECK_FALSE(r.certificate.has_value());
        check_witness(g, *r.witness);
      }
    }
  }
  CHECK(members > 0);
  CHECK(non_members > 0);
}

TEST_CASE("members are exactly the graphs whose every connected spanning subgraph keeps a perfect matching") {
  for (int n = 2; n <= 6; n += 2) {
    const std::uint64_t top = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t bits = 0; bits < top; ++bits) {
      Graph g = graph_from_pair_bits(n, bits);
      if (!is_connected(g)) continue;
      const std::vector<Edge> es = g.edges();
      bool all_subgraphs_match = true;
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << es.size()); ++pick) {
        Graph h(n);
        for (std::size_t i = 0; i < es.size(); ++i)
          if ((pick >> i) & 1) h.add_edge(es[i].u, es[i].v);
        if (!is_connected(h)) continue;
        if (!has_perfect_matching(h)) {
          all_subgraphs_match = false;
          break;
        }
      }
      CHECK(recognize(g).member == all_subgraphs_match);
    }
  }
}

TEST_CASE("recognize fixtures") {
  SUBCASE("K2 is certified by its single edge") {
    RecognizeResult r = recognize(gen_complete(2));
    REQUIRE(r.member);
    const auto* e = std::get_if<CertBaseEdge>(&r.certificate->node);
    REQUIRE(e != nullptr);
    CHECK(e->u == 0);
    CHECK(e->v == 1);
  }
  SUBCASE("C6 is certified as an even cycle in vertex order") {
    RecognizeResult r = recognize(gen_cycle(6));
    REQUIRE(r.member);
    const auto* c = std::get_if<CertBaseCycle>(&r.certificate->node);
    REQUIRE(c != nullptr);
    CHECK(c->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
  SUBCASE("the triangle corona is certified host-by-host") {
    RecognizeResult r = recognize(corona(gen_complete(3)));
    REQUIRE(r.member);
    const auto* c = std::get_if<CertCorona>(&r.certificate->node);
    REQUIRE(c != nullptr);
    CHECK(c->host == std::vector<int>{0, 1, 2});
    CHECK(c->pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
  }
  SUBCASE("P6 splits at a cut vertex into two smaller members") {
    RecognizeResult r = recognize(gen_path(6));
    REQUIRE(r.member);
    const auto* gl = std::get_if<CertGlue>(&r.certificate->node);
    REQUIRE(gl != nullptr);
    CHECK(gl->attach == 2);
    CHECK(verify_certificate(gen_path(6), *r.certificate).ok);
  }
  SUBCASE("K4 is refuted by the star spanning tree") {
    RecognizeResult r = recognize(gen_complete(4));
    REQUIRE_FALSE(r.member);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->tree == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}});
    CHECK(r.witness->bad_vertex == 1);
  }
  SUBCASE("the diamond is refuted by the star at its chord vertex") {
    Graph diamond = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    RecognizeResult r = recognize(diamond);
    REQUIRE_FALSE(r.member);
    CHECK(r.witness->tree == std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}});
    CHECK(r.witness->bad_vertex == 2);
  }
  SUBCASE("odd order refutes by parity, tree included for replay") {
    RecognizeResult r1 = recognize(Graph(1));
    REQUIRE_FALSE(r1.member);
    CHECK(r1.witness->odd_order);
    CHECK(r1.witness->tree.empty());
    CHECK_FALSE(r1.witness->bad_vertex.has_value());

    RecognizeResult r3 = recognize(gen_path(3));
    REQUIRE_FALSE(r3.member);
    CHECK(r3.witness->odd_order);
    CHECK(r3.witness->tree.size() == 2);
  }
  SUBCASE("a matchable graph with an unmatchable part is refuted through the lift") {
    // K4 hanging off a path: the K4 side has no good spanning tree, and its
    // star witness extends across the cut vertex
    Graph g = gen_complete(4);
    Graph h(6);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    h.add_edge(3, 4);
    h.add_edge(4, 5);
    RecognizeResult r = recognize(h);
    REQUIRE_FALSE(r.member);
    CHECK(r.witness->tree == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
    CHECK(r.witness->bad_vertex == 1);
  }
  SUBCASE("the pentagon corona is a member, and the oracle concurs") {
    Graph g = corona(gen_cycle(5));
    CHECK(recognize(g).member);
    CHECK(recognize_oracle(g));
  }
  SUBCASE("disconnected input is an error") {
    CHECK_THROWS_AS(recognize(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(recognize_oracle(Graph(2)), std::invalid_argument);
  }
  SUBCASE("the oracle honours the tree cap") {
    CHECK_THROWS_AS(recognize_oracle(gen_cycle(6), 3), TreeCountCapExceeded);
  }
}

TEST_CASE("verify_certificate replays a hand-written glue for P6") {
  const Graph p6 = gen_path(6);
  const int virt = kVirtualIdBase;
  auto left = [&] { return corona_cert({1, 2}, {{1, 0}, {2, virt}}); };
  auto right = [&] { return corona_cert({3, 4}, {{3, 2}, {4, 5}}); };

  SUBCASE("the correct glue verifies") {
    VerifyResult v = verify_certificate(p6, glue_cert(2, virt, left(), right()));
    CHECK(v.ok);
    CHECK(v.status == VerifyStatus::kOk);
  }
  SUBCASE("a small virtual id is rejected") {
    VerifyResult v = verify_certificate(p6, glue_cert(2, 7, left(), right()));
    CHECK_FALSE(v.ok);
    CHECK(v.status == VerifyStatus::kGlueBadVirtualId);
  }
  SUBCASE("sides swapped: the virtual vertex lands on the wrong side") {
    VerifyResult v = verify_certificate(p6, glue_cert(2, virt, right(), left()));
    CHECK_FALSE(v.ok);
    CHECK(v.status == VerifyStatus::kGlueBadVirtualId);
  }
  SUBCASE("a misplaced attach vertex is caught at the pendant check") {
    VerifyResult v = verify_certificate(p6, glue_cert(3, virt, left(), right()));
    CHECK_FALSE(v.ok);
    CHECK(v.status == VerifyStatus::kGlueVirtualNotPendant);
  }
  SUBCASE("a cycle through the virtual vertex is not a pendant") {
    Certificate cyc{CertBaseCycle{{0, 1, 2, virt}}};
    VerifyResult v = verify_certificate(p6, glue_cert(2, virt, std::move(cyc), right()));
    CHECK_FALSE(v.ok);
    CHECK(v.status == VerifyStatus::kGlueVirtualNotPendant);
  }
  SUBCASE("sides may only overlap in the attach vertex") {
    Certificate wide_right = corona_cert({2, 3}, {{2, 1}, {3, 4}});
    VerifyResult v = verify_certificate(p6, glue_cert(2, virt, left(), std::move(wide_right)));
    CHECK_FALSE(v.ok);
    CHECK(v.status == VerifyStatus::kGlueOverlapNotAttachOnly);
  }
  SUBCASE("attach vertex must appear on both sides") {
    Certificate narrow_right = corona_cert({4}, {{4, 5}});
    VerifyResult v = verify_certificate(p6, glue_cert(2, virt, left(), std::move(narrow_right)));
    CHECK_FALSE(v.ok);
    CHECK(v.status == VerifyStatus::kGlueAttachMissing);
  }
  SUBCASE("a missing child is rejected") {
    CertGlue g;
    g.attach = 2;
    g.virtual_id = virt;
    g.left = std::make_unique<Certificate>(left());
    VerifyResult v = verify_certificate(p6, Certificate{std::move(g)});
    CHECK_FALSE(v.ok);
    CHECK(v.status == VerifyStatus::kGlueMissingChild);
  }
}

TEST_CASE("verify_certificate rejects malformed and mismatched certificates") {
  SUBCASE("loops") {
    VerifyResult v = verify_certificate(gen_complete(2), Certificate{CertBaseEdge{1, 1}});
    CHECK(v.status == VerifyStatus::kBaseEdgeLoop);
  }
  SUBCASE("an edge certificate never covers C6") {
    VerifyResult v = verify_certificate(gen_cycle(6), Certificate{CertBaseEdge{0, 1}});
    CHECK(v.status == VerifyStatus::kVertexSetMismatch);
  }
  SUBCASE("degenerate cycles") {
    CHECK(verify_certificate(gen_cycle(4), Certificate{CertBaseCycle{{0, 1}}}).status ==
          VerifyStatus::kCycleTooShort);
    CHECK(verify_certificate(gen_cycle(5), Certificate{CertBaseCycle{{0, 1, 2, 3, 4}}}).status ==
          VerifyStatus::kCycleOddLength);
    CHECK(verify_certificate(gen_cycle(4), Certificate{CertBaseCycle{{0, 1, 2, 1}}}).status ==
          VerifyStatus::kCycleRepeatedVertex);
  }
  SUBCASE("a cycle in the wrong vertex order claims edges the graph lacks") {
    VerifyResult v = verify_certificate(gen_cycle(6), Certificate{CertBaseCycle{{0, 2, 4, 1, 3, 5}}});
    CHECK(v.status == VerifyStatus::kEdgeSetMismatch);
  }
  SUBCASE("corona pairing must cover the host bijectively") {
    Graph g = corona(gen_complete(3));
    CHECK(verify_certificate(g, corona_cert({0, 1, 2}, {{0, 3}, {0, 4}, {2, 5}})).status ==
          VerifyStatus::kCoronaPairingNotBijection);
    CHECK(verify_certificate(g, corona_cert({0, 1, 2}, {{0, 3}, {1, 4}})).status ==
          VerifyStatus::kCoronaPairingNotBijection);
    CHECK(verify_certificate(g, corona_cert({0, 1, 2}, {{0, 3}, {1, 3}, {2, 5}})).status ==
          VerifyStatus::kCoronaPairingNotBijection);
    CHECK(verify_certificate(g, corona_cert({0, 1, 2}, {{0, 1}, {1, 4}, {2, 5}})).status ==
          VerifyStatus::kCoronaPairingNotBijection);
  }
  SUBCASE("corona host must be connected inside the graph") {
    Graph two_k2 = Graph::from_edges(4, {{0, 2}, {1, 3}});
    CHECK(verify_certificate(two_k2, corona_cert({0, 1}, {{0, 2}, {1, 3}})).status ==
          VerifyStatus::kCoronaHostNotConnected);
  }
  SUBCASE("a swapped pairing survives replay but fails the edge comparison") {
    Graph g = corona(gen_complete(3));
    CHECK(verify_certificate(g, corona_cert({0, 1, 2}, {{0, 4}, {1, 3}, {2, 5}})).status ==
          VerifyStatus::kEdgeSetMismatch);
  }
  SUBCASE("reason codes have printable names") {
    CHECK(std::string(to_string(VerifyStatus::kOk)) == "ok");
    CHECK(std::string(to_string(VerifyStatus::kEdgeSetMismatch)) == "edge-set-mismatch");
  }
}

TEST_CASE("pendant_replace splices a graph in place of a pendant vertex") {
  SUBCASE("replacing with K2 reproduces the host") {
    Graph out = pendant_replace(gen_path(4), 3, gen_complete(2), 0);
    CHECK(out == gen_path(4));
  }
  SUBCASE("growing K2 into C6 leaves exactly C6") {
    Graph out = pendant_replace(gen_complete(2), 0, gen_cycle(6), 3);
    CHECK(is_isomorphic(out, gen_cycle(6)));
  }
  SUBCASE("replacing a corona pendant with C4 keeps membership") {
    Graph out = pendant_replace(corona(gen_complete(3)), 3, gen_cycle(4), 0);
    CHECK(out.order() == 8);
    CHECK(recognize(out).member);
    CHECK(recognize_oracle(out));
  }
  SUBCASE("non-pendant and out-of-range arguments are errors") {
    CHECK_THROWS_AS(pendant_replace(gen_cycle(4), 0, gen_complete(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(pendant_replace(gen_path(4), 1, gen_complete(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(pendant_replace(gen_path(4), 3, gen_complete(2), 5), std::invalid_argument);
  }
  SUBCASE("membership is closed under pendant replacement") {
    Rng rng(411);
    int done = 0;
    while (done < 50) {
      Graph base = sample_member(2 + rng.next_int(4), rng.raw());
      int pendant = -1;
      for (int v = 0; v < base.order() && pendant < 0; ++v)
        if (base.degree(v) == 1) pendant = v;
      if (pendant < 0) base = corona(random_connected_graph(2 + rng.next_int(4), rng)), pendant = base.order() / 2;
      Graph part = sample_member(1 + rng.next_int(4), rng.raw());
      Graph out = pendant_replace(base, pendant, part, rng.next_int(part.order()));
      CHECK(recognize(out).member);
      ++done;
    }
  }
}

TEST_CASE("lift_witness extends a one-sided refutation across a cut vertex") {
  // K4 with a path tail: 3 is the cut vertex between them
  Graph h(6);
  for (const Edge& e : gen_complete(4).edges()) h.add_edge(e.u, e.v);
  h.add_edge(3, 4);
  h.add_edge(4, 5);

  SUBCASE("right side: the part tree is kept verbatim") {
    Witness part;
    part.tree = {{0, 1}, {1, 2}, {1, 3}};
    part.bad_vertex = 1;
    Witness out = lift_witness(h, part, LiftSide::kRight, 3);
    CHECK(out.tree == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
    CHECK(out.bad_vertex == 1);
    check_witness(h, out);
  }
  SUBCASE("left side: the virtual pendant is dropped before completing") {
    Witness part;
    part.tree = {{3, 4}, {4, 5}, Edge(3, kVirtualIdBase)};
    Witness out = lift_witness(h, part, LiftSide::kLeft, 3);
    CHECK(out.tree == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    CHECK(out.bad_vertex == 0);
    check_witness(h, out);
  }
  SUBCASE("input validation") {
    Witness empty;
    CHECK_THROWS_AS(lift_witness(h, empty, LiftSide::kRight, 3), std::invalid_argument);

    Witness part;
    part.tree = {{0, 1}, {1, 2}, {1, 3}};
    CHECK_THROWS_AS(lift_witness(h, part, LiftSide::kRight, 99), std::invalid_argument);
    CHECK_THROWS_AS(lift_witness(h, part, LiftSide::kLeft, 3), std::invalid_argument);

    Witness with_virtual;
    with_virtual.tree = {{0, 1}, {1, 2}, Edge(1, kVirtualIdBase)};
    CHECK_THROWS_AS(lift_witness(h, with_virtual, LiftSide::kRight, 1), std::invalid_argument);
  }
  SUBCASE("a part edge absent from the parent is rejected") {
    Witness part;
    part.tree = {{0, 1}, {1, 2}, {1, 3}};
    part.bad_vertex = 1;
    CHECK_THROWS_AS(lift_witness(gen_cycle(6), part, LiftSide::kRight, 3), std::invalid_argument);
  }
  SUBCASE("a lift that completes to a matchable tree is rejected") {
    Witness part;
    part.tree = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(lift_witness(gen_cycle(6), part, LiftSide::kRight, 2), std::invalid_argument);
  }
  SUBCASE("a disconnected complement side is rejected") {
    Witness part;
    part.tree = {{2, 3}};
    CHECK_THROWS_AS(lift_witness(gen_path(6), part, LiftSide::kRight, 2), std::invalid_argument);
  }
}

TEST_CASE("samplers produce what they promise") {
  SUBCASE("sampled members are members") {
    for (int half = 1; half <= 8; ++half)
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = sample_member(half, seed);
        CHECK(g.order() == 2 * half);
        CHECK(recognize(g).member);
      }
  }
  SUBCASE("sampled trees are trees with a perfect matching") {
    for (int half = 1; half <= 12; ++half)
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph t = sample_pm_tree(half, seed);
        CHECK(t.order() == 2 * half);
        CHECK(is_tree(t));
        CHECK(tree_pm_criterion(t));
        REQUIRE(tree_perfect_matching(t).has_value());
      }
  }
  SUBCASE("half order one is exactly K2") {
    CHECK(sample_member(1, 42) == gen_complete(2));
    CHECK(sample_pm_tree(1, 42) == gen_complete(2));
  }
  SUBCASE("half order bounds") {
    CHECK_THROWS_AS(sample_member(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_member(33, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_pm_tree(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_pm_tree(33, 1), std::invalid_argument);
  }
  SUBCASE("sampling is deterministic in the seed") {
    CHECK(sample_member(6, 99) == sample_member(6, 99));
    CHECK(sample_pm_tree(6, 99) == sample_pm_tree(6, 99));
  }
}

}  // TEST_SUITE

#ifndef AKGRAPH_KEKULE_HPP
#define AKGRAPH_KEKULE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "akgraph/graph.hpp"
#include "akgraph/spanning.hpp"

namespace akgraph {

/// Virtual pendant vertices introduced while splitting a graph at a cut
/// vertex get ids from here up, so they can never collide with dense ids.
inline constexpr int kVirtualIdBase = 1 << 30;

struct Certificate;

/// A single K₂ piece.
struct CertBaseEdge {
  int u = 0, v = 0;
};

/// An even cycle, vertices in cyclic order.
struct CertBaseCycle {
  std::vector<int> vertices;
};

/// g restricted to `host` is connected and every host vertex owns exactly
/// one pendant leaf: g ≅ host∘K₁.
struct CertCorona {
  std::vector<int> host;                   // ascending
  std::vector<std::pair<int, int>> pairs;  // (host vertex, its leaf)
};

/// A separation at `attach`: the right certificate covers one side, the
/// left certificate covers the rest plus a virtual pendant hung on attach
/// (the pendant keeps the left side honest about parity at the joint).
struct CertGlue {
  int attach = 0;
  int virtual_id = 0;
  std::unique_ptr<Certificate> left;
  std::unique_ptr<Certificate> right;
};

/// Recursive decomposition proving membership: replaying it bottom-up
/// reconstructs the graph exactly.
struct Certificate {
  std::variant<CertBaseEdge, CertBaseCycle, CertCorona, CertGlue> node;
};

/// Proof of non-membership: a spanning tree with no perfect matching.
/// For even order some vertex leaves >= 3 odd components when deleted;
/// odd order is its own refutation.
struct Witness {
  std::vector<Edge> tree;
  std::optional<int> bad_vertex;
  bool odd_order = false;
};

struct RecognizeResult {
  bool member = false;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
};

/// Decide whether every spanning tree of g has a perfect matching —
/// equivalently, whether g has no anti-Kekulé set. Produces a Certificate
/// for members and a Witness for non-members. Requires g connected.
RecognizeResult recognize(const Graph& g);

/// Brute-force reference: enumerate all spanning trees (up to cap) and test
/// each against the matching criterion.
bool recognize_oracle(const Graph& g, std::uint64_t cap = kDefaultTreeCap);

enum class VerifyStatus {
  kOk,
  kBaseEdgeLoop,
  kCycleTooShort,
  kCycleOddLength,
  kCycleRepeatedVertex,
  kCoronaPairingNotBijection,
  kCoronaHostNotConnected,
  kGlueMissingChild,
  kGlueBadVirtualId,
  kGlueVirtualNotPendant,
  kGlueAttachMissing,
  kGlueOverlapNotAttachOnly,
  kVertexSetMismatch,
  kEdgeSetMismatch,
};

const char* to_string(VerifyStatus s);

struct VerifyResult {
  bool ok = false;
  VerifyStatus status = VerifyStatus::kOk;
  explicit operator bool() const { return ok; }
};

/// Replay a certificate and compare against g. Invalid certificates are a
/// false result with a reason code, never an exception.
VerifyResult verify_certificate(const Graph& g, const Certificate& c);

/// Replace the pendant vertex v of g by the graph f: delete v, then fuse
/// f's vertex w onto v's neighbor. Result ids: g - v densely first, then
/// f - w in ascending order.
Graph pendant_replace(const Graph& g, int v, const Graph& f, int w);

enum class LiftSide { kLeft, kRight };

/// Turn a failing witness for one side of a separation at `attach` into a
/// witness for the whole graph: keep the bad tree (dropping its virtual
/// pendant if it is the left side), span the other side, and rescan for the
/// bad vertex.
Witness lift_witness(const Graph& parent, const Witness& part, LiftSide side, int attach);

/// Pseudorandom member of order 2n: recursively composes smaller members
/// onto random connected hosts, bottoming out at K₂ and even cycles.
/// Deterministic for a fixed seed.
Graph sample_member(int half_order, std::uint64_t seed);

/// Pseudorandom tree of order 2n with a perfect matching: join two smaller
/// such trees by a new edge, bottoming out at K₂. Deterministic for a seed.
Graph sample_pm_tree(int half_order, std::uint64_t seed);

}  // namespace akgraph

#endif  // AKGRAPH_KEKULE_HPP

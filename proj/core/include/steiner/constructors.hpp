#pragma once

// Spanning trees with small Steiner k-Wiener index, built from a distance-3
// vertex packing (any connected graph) or a distance-3 matching (triangle-free
// graphs), together with certificates recording every intermediate object so
// that each side condition can be re-checked independently.

#include "steiner/bounds.hpp"
#include "steiner/graph.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace steiner {

struct PackingCertificate {
  std::size_t order = 0;
  std::vector<Edge> tree_edges;        // lexicographic
  std::vector<Vertex> anchors;         // a_1..a_s in construction order
  std::vector<Edge> connectors;        // e_2..e_s
  std::vector<std::uint64_t> weights;  // c(v); zero outside the anchors
  std::vector<Vertex> assignment;      // a_v, a nearest anchor of v in T

  Graph tree() const;
  friend bool operator==(const PackingCertificate&, const PackingCertificate&) = default;
};

struct MatchingCertificate {
  std::size_t order = 0;
  std::vector<Edge> tree_edges;
  std::vector<Edge> matching;          // b_1..b_s in construction order
  std::vector<Edge> connectors;
  std::vector<std::uint64_t> weights;  // c(v); zero outside V(M)
  std::vector<Vertex> assignment;      // a_v, a nearest vertex of V(M) in T

  Graph tree() const;
  /// V(M), ascending.
  std::vector<Vertex> matched_vertices() const;
  friend bool operator==(const MatchingCertificate&, const MatchingCertificate&) = default;
};

using Certificate = std::variant<PackingCertificate, MatchingCertificate>;

/// Grows A from {start}: repeatedly adds the smallest vertex at distance
/// exactly 3 from A together with its closed-neighbourhood star, joined by the
/// middle edge of a shortest path. Remaining vertices then attach to their
/// smallest neighbour in the grown tree. Throws PreconditionError for a
/// disconnected graph or an out-of-range start.
PackingCertificate packing_spanning_tree(const Graph& g, Vertex start);

/// Edge analogue: grows M from {start} by the lexicographically smallest edge
/// at edge-distance exactly 3, each with its double star on N(u) + N(v).
/// Remaining vertices attach along a BFS from the grown tree, which keeps
/// d_T(v, V(M)) = d_G(v, V(M)). Throws PreconditionError for a disconnected
/// graph, a graph with a triangle, an edgeless graph or a non-edge start.
MatchingCertificate matching_spanning_tree(const Graph& g, Edge start);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  std::vector<Check> checks;
  std::vector<BoundReport> bounds;

  bool passed() const;
  const Check* find_check(std::string_view name) const;
  const BoundReport* find_bound(std::string_view name) const;
};

/// Re-derives every side condition from g and the certificate alone and
/// compares SW_k(T) with the corresponding closed-form bound. The
/// intermediate inequalities of the construction (tree vs. weighted tree,
/// weighted tree vs. power graph, fundamental bound) are reported as well.
/// Failures are report entries, not exceptions; a k outside 1..n throws
/// PreconditionError.
CertificateReport verify_certificate(const Certificate& cert, const Graph& g, unsigned k);

}  // namespace steiner

#pragma once

// Steiner distances and the (weighted) Steiner k-Wiener index.
//
// SW_k(G)   = sum of d(S) over all k-subsets S of V(G)
// mu_k(G)   = SW_k(G) / C(n, k)
// SW_k(G,c) = sum of d(S*) over all k-subsets S of the copy multiset V_c,
//             where S* is the set of distinct originals of S.

#include "steiner/exact.hpp"
#include "steiner/graph.hpp"
#include "steiner/weights.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace steiner {

/// Nonempty set of distinct terminals, kept sorted.
class TerminalSet {
 public:
  TerminalSet(std::initializer_list<Vertex> vertices);
  explicit TerminalSet(std::span<const Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

 private:
  std::vector<Vertex> vertices_;
};

/// Exact Steiner distances on one connected graph. Runs the Dreyfus-Wagner
/// dynamic program over (terminal subset, vertex) states seeded from a shared
/// all-pairs distance matrix.
class SteinerSolver {
 public:
  /// Throws PreconditionError if g is disconnected.
  explicit SteinerSolver(const Graph& g);

  std::size_t order() const noexcept { return order_; }
  std::uint32_t pair_distance(Vertex a, Vertex b) const { return dist_[a * order_ + b]; }

  /// Terminals must be distinct and in range.
  std::uint32_t distance(std::span<const Vertex> terminals);

 private:
  std::uint32_t dreyfus_wagner(std::span<const Vertex> terminals);

  std::size_t order_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> merged_;
};

/// Steiner distances in a tree: half the closed walk through the terminals
/// in DFS preorder.
class TreeSteiner {
 public:
  /// Throws PreconditionError unless t is a tree.
  explicit TreeSteiner(const Graph& t);

  std::uint32_t distance(std::span<const Vertex> terminals) const;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> preorder_;
};

std::uint32_t steiner_distance(const Graph& g, const TerminalSet& s);
std::uint32_t steiner_distance_tree(const Graph& t, const TerminalSet& s);

/// Requires g connected and 1 <= k <= n. sw_k(g, 1) == 0; sw_k(g, 2) is the
/// Wiener index.
BigInt sw_k(const Graph& g, unsigned k);
Rational mu_k(const Graph& g, unsigned k);

/// sw_k for trees via edge cuts; identical values to sw_k.
BigInt sw_k_tree(const Graph& t, unsigned k);

/// Reference evaluation: materialises V_c and enumerates all C(N, k) copy
/// subsets. Requires g connected and 1 <= k <= N.
BigInt sw_k_weighted_naive(const Graph& g, const WeightFn& c, unsigned k);

/// Grouped evaluation over originals S* of at most k vertices of positive
/// weight, each counted with the inclusion-exclusion multiplicity
/// M(S*) = sum over T of S* of (-1)^(|S*|-|T|) C(c(T), k).
BigInt sw_k_weighted(const Graph& g, const WeightFn& c, unsigned k);

/// Tree fast path: an edge is in the Steiner tree of S* iff copies lie on
/// both sides, so SW_k(t,c) = sum over edges of C(N,k) - C(c(A),k) - C(c(B),k).
BigInt sw_k_weighted_tree(const Graph& t, const WeightFn& c, unsigned k);

/// sw_k_weighted / C(N, k).
Rational mu_k_weighted(const Graph& g, const WeightFn& c, unsigned k);

}  // namespace steiner

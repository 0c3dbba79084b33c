#pragma once

// Weight-moving surgery on trees.
//
// An ironing move re-hangs a set A of branches at u onto the neighbour w.
// With F the component of T - {ua : a in A} containing u, U and W the sides
// of F - uw containing u and w, and X the remaining vertices, SW_k(T',c) -
// SW_k(T,c) = sum_{i=1}^{k-1} C(c(X),k-i) [C(c(U),i) - C(c(W),i)], which is
// positive whenever c(U) > c(W) and c(X) >= 1. Repeating such moves at
// branch vertices turns every positively weighted tree into a path without
// ever decreasing SW_k.

#include "steiner/exact.hpp"
#include "steiner/graph.hpp"
#include "steiner/weights.hpp"

#include <cstdint>
#include <vector>

namespace steiner {

struct IroningMove {
  Vertex u = 0;
  Vertex w = 0;
  std::vector<Vertex> branch;  // A, a nonempty subset of N(u) - {w}

  friend bool operator==(const IroningMove&, const IroningMove&) = default;
};

/// The vertex partition induced by a move, each part ascending.
struct IroningSplit {
  std::vector<Vertex> u_side;  // U
  std::vector<Vertex> w_side;  // W
  std::vector<Vertex> rest;    // X
};

/// Validates the move against `tree` and returns (U, W, X).
/// Throws PreconditionError when tree is not a tree, uw is not an edge, or A
/// is empty, repeats a vertex, contains w or a non-neighbour of u.
IroningSplit ironing_split(const Graph& tree, const IroningMove& move);

/// T' = T - {ua : a in A} + {wa : a in A}.
Graph ironing_out(const Graph& tree, const IroningMove& move);

/// Closed-form SW_k(T', c) - SW_k(T, c).
BigInt sw_gap(const Graph& tree, const IroningMove& move, const WeightFn& c, unsigned k);

struct PathCanonicalization {
  Graph path;
  std::vector<IroningMove> trace;
  /// SW_k(., c) before every move and after the last one (trace.size() + 1 entries).
  std::vector<BigInt> sw_values;
};

/// Repeatedly takes the smallest vertex u of degree >= 3, orders the branches
/// V_1..V_r of T - u by decreasing weight (ties: smaller minimum vertex
/// first) and moves the roots of V_1..V_{r-2} onto the root of V_r.
/// Requires a tree with every weight >= 1 and 1 <= k <= N.
PathCanonicalization canonicalize_to_path(const Graph& tree, const WeightFn& c, unsigned k);

/// Upper bound on SW_k(T, c) for a tree with total weight N and every weight
/// at least C >= 1:
///   (k-1)/(k+1) * (N+1)/C * C(N,k) + (C-1)/C * C(N,k).
Rational fundamental_bound(std::uint64_t total_weight, std::uint64_t min_weight, unsigned k);

}  // namespace steiner

#pragma once

// Random and exhaustive graph ensembles shared by the unit and acceptance
// suites. Every generator is driven by an explicit std::mt19937_64.

#include "steiner/graph.hpp"
#include "steiner/tree_transforms.hpp"
#include "steiner/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

namespace steiner::testing {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// Uniform random labelled tree on n vertices (Pruefer sequence).
Graph random_tree(std::size_t n, Rng& rng);

/// Random tree plus each remaining pair independently with probability p.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

/// Connected bipartite graph with parts of size a and b (a, b >= 1).
Graph random_connected_bipartite(std::size_t a, std::size_t b, double p, Rng& rng);

/// Every edge replaced by a path of length 2 (always triangle-free).
Graph subdivide(const Graph& g);

/// Mix of bipartite graphs and subdivisions of random connected graphs,
/// all connected and triangle-free, with order at most max_n (>= 4).
Graph random_triangle_free(std::size_t max_n, Rng& rng);

WeightFn random_weights(std::size_t n, std::uint64_t lo, std::uint64_t hi, Rng& rng);

/// Calls f on every connected labelled graph on n vertices.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& f);

/// A uniformly chosen valid ironing move on `tree`, if the tree has a vertex
/// of degree >= 2.
std::optional<IroningMove> random_ironing_move(const Graph& tree, Rng& rng);

}  // namespace steiner::testing

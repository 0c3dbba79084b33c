#include "steiner/tree_transforms.hpp"

#include "steiner/errors.hpp"
#include "steiner/steiner.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace steiner {

namespace {

// Vertices reachable from `start` without crossing a blocked edge.
std::vector<Vertex> reach(const Graph& g, Vertex start, const std::vector<Edge>& blocked) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> out{start};
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Vertex x = out[i];
    for (Vertex y : g.neighbors(x)) {
      if (seen[y] || std::find(blocked.begin(), blocked.end(), Edge(x, y)) != blocked.end()) continue;
      seen[y] = true;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IroningSplit ironing_split(const Graph& tree, const IroningMove& move) {
  if (!is_tree(tree)) throw PreconditionError("ironing move on a graph that is not a tree");
  if (move.u >= tree.order() || move.w >= tree.order() || !tree.adjacent(move.u, move.w)) {
    throw PreconditionError("ironing move: uw is not an edge");
  }
  if (move.branch.empty()) throw PreconditionError("ironing move: branch set A is empty");
  std::vector<Vertex> sorted = move.branch;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("ironing move: branch set A repeats a vertex");
  }
  std::vector<Edge> cut;
  for (Vertex a : move.branch) {
    if (a == move.w) throw PreconditionError("ironing move: A contains w");
    if (a >= tree.order() || !tree.adjacent(move.u, a)) {
      throw PreconditionError("ironing move: " + std::to_string(a) + " is not a neighbour of u");
    }
    cut.emplace_back(move.u, a);
  }
  cut.emplace_back(move.u, move.w);

  IroningSplit split;
  split.u_side = reach(tree, move.u, cut);
  split.w_side = reach(tree, move.w, cut);
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (!std::binary_search(split.u_side.begin(), split.u_side.end(), v) &&
        !std::binary_search(split.w_side.begin(), split.w_side.end(), v)) {
      split.rest.push_back(v);
    }
  }
  return split;
}

Graph ironing_out(const Graph& tree, const IroningMove& move) {
  ironing_split(tree, move);
  Graph out = tree;
  for (Vertex a : move.branch) {
    out.remove_edge(move.u, a);
    out.add_edge(move.w, a);
  }
  if (!is_tree(out)) throw Error("ironing move produced a non-tree");
  return out;
}

BigInt sw_gap(const Graph& tree, const IroningMove& move, const WeightFn& c, unsigned k) {
  if (c.order() != tree.order()) throw PreconditionError("weight map does not match the tree");
  const IroningSplit split = ironing_split(tree, move);
  const std::uint64_t cu = c.sum(split.u_side);
  const std::uint64_t cw = c.sum(split.w_side);
  const std::uint64_t cx = c.sum(split.rest);
  BigInt gap = 0;
  for (unsigned i = 1; i < k; ++i) gap += binomial(cx, k - i) * (binomial(cu, i) - binomial(cw, i));
  return gap;
}

PathCanonicalization canonicalize_to_path(const Graph& tree, const WeightFn& c, unsigned k) {
  if (!is_tree(tree)) throw PreconditionError("canonicalize_to_path: input is not a tree");
  if (c.order() != tree.order()) throw PreconditionError("weight map does not match the tree");
  if (c.min() < 1) throw PreconditionError("canonicalize_to_path: every weight must be at least 1");

  PathCanonicalization out;
  out.path = tree;
  out.sw_values.push_back(sw_k_weighted_tree(out.path, c, k));

  while (true) {
    Vertex u = 0;
    while (u < out.path.order() && out.path.degree(u) < 3) ++u;
    if (u == out.path.order()) break;

    // (weight, smallest vertex, root neighbour) per branch of T - u.
    std::vector<std::tuple<std::uint64_t, Vertex, Vertex>> branches;
    for (Vertex root : out.path.neighbors(u)) {
      const std::vector<Vertex> part = reach(out.path, root, {Edge(u, root)});
      branches.emplace_back(c.sum(part), part.front(), root);
    }
    std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
      return std::get<1>(a) < std::get<1>(b);
    });

    IroningMove move;
    move.u = u;
    move.w = std::get<2>(branches.back());
    for (std::size_t i = 0; i + 2 < branches.size(); ++i) move.branch.push_back(std::get<2>(branches[i]));
    out.path = ironing_out(out.path, move);
    out.trace.push_back(std::move(move));
    out.sw_values.push_back(sw_k_weighted_tree(out.path, c, k));
  }
  return out;
}

Rational fundamental_bound(std::uint64_t total_weight, std::uint64_t min_weight, unsigned k) {
  if (min_weight < 1) throw PreconditionError("fundamental bound requires minimum weight C >= 1");
  if (k < 1 || k > total_weight) throw PreconditionError("fundamental bound requires 1 <= k <= N");
  const Rational choose(binomial(total_weight, k));
  return Rational(k - 1, k + 1) * Rational(total_weight + 1, min_weight) * choose +
         Rational(min_weight - 1, min_weight) * choose;
}

}  // namespace steiner

#include "fixtures.hpp"

#include "steiner/extremal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace steiner::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph random_tree(std::size_t n, Rng& rng) {
  Graph t(n);
  if (n <= 1) return t;
  if (n == 2) {
    t.add_edge(0, 1);
    return t;
  }
  std::vector<Vertex> code(n - 2);
  for (Vertex& x : code) x = static_cast<Vertex>(uniform(rng, 0, n - 1));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : code) ++degree[x];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (Vertex x : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    t.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  t.add_edge(a, b);
  return t;
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  Graph g = random_tree(n, rng);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b) && coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

Graph random_connected_bipartite(std::size_t a, std::size_t b, double p, Rng& rng) {
  const std::size_t n = a + b;
  Graph g(n);
  // Random spanning tree respecting the bipartition: each new vertex joins a
  // random earlier vertex on the other side.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);
  auto side = [a](Vertex v) { return v < a; };
  // Start with one vertex of each side so that both sides are reachable.
  auto first_left = std::find_if(order.begin(), order.end(), [&](Vertex v) { return side(v); });
  std::iter_swap(order.begin(), first_left);
  auto first_right = std::find_if(order.begin() + 1, order.end(), [&](Vertex v) { return !side(v); });
  std::iter_swap(order.begin() + 1, first_right);
  g.add_edge(order[0], order[1]);
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Vertex> candidates;
    for (std::size_t j = 0; j < i; ++j) {
      if (side(order[j]) != side(order[i])) candidates.push_back(order[j]);
    }
    g.add_edge(order[i], candidates[uniform(rng, 0, candidates.size() - 1)]);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = static_cast<Vertex>(a); y < n; ++y) {
      if (!g.adjacent(x, y) && coin(rng)) g.add_edge(x, y);
    }
  }
  return g;
}

Graph subdivide(const Graph& g) {
  const auto edges = g.edges();
  Graph out(g.order() + edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Vertex mid = static_cast<Vertex>(g.order() + i);
    out.add_edge(edges[i].u, mid);
    out.add_edge(edges[i].v, mid);
  }
  return out;
}

Graph random_triangle_free(std::size_t max_n, Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0:
    case 1: {
      const std::size_t n = uniform(rng, 4, max_n);
      const std::size_t a = uniform(rng, 1, n - 1);
      const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
      return random_connected_bipartite(a, n - a, p, rng);
    }
    case 2: {
      // Subdivision of a small connected graph: n + m <= max_n.
      while (true) {
        const std::size_t base = uniform(rng, 2, std::max<std::size_t>(2, max_n / 2));
        const Graph g = random_connected_graph(base, 0.3, rng);
        if (g.order() + g.size() <= max_n) return subdivide(g);
      }
    }
    default: {
      // Even cycles with chords between opposite classes stay bipartite.
      const std::size_t half = uniform(rng, 2, max_n / 2);
      Graph g = cycle_graph(2 * half);
      std::bernoulli_distribution coin(0.15);
      for (Vertex x = 0; x < 2 * half; x += 2) {
        for (Vertex y = 1; y < 2 * half; y += 2) {
          if (!g.adjacent(x, y) && coin(rng)) g.add_edge(x, y);
        }
      }
      return g;
    }
  }
}

WeightFn random_weights(std::size_t n, std::uint64_t lo, std::uint64_t hi, Rng& rng) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = uniform(rng, lo, hi);
  return WeightFn(std::move(w));
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) + 1 < static_cast<int>(n)) continue;
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) g.add_edge(pairs[i].u, pairs[i].v);
    }
    if (is_connected(g)) f(g);
  }
}

std::optional<IroningMove> random_ironing_move(const Graph& tree, Rng& rng) {
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) >= 2) candidates.push_back(v);
  }
  if (candidates.empty()) return std::nullopt;
  IroningMove move;
  move.u = candidates[uniform(rng, 0, candidates.size() - 1)];
  std::vector<Vertex> nbrs(tree.neighbors(move.u).begin(), tree.neighbors(move.u).end());
  std::shuffle(nbrs.begin(), nbrs.end(), rng);
  move.w = nbrs.back();
  nbrs.pop_back();
  const std::size_t take = uniform(rng, 1, nbrs.size());
  move.branch.assign(nbrs.begin(), nbrs.begin() + static_cast<std::ptrdiff_t>(take));
  std::sort(move.branch.begin(), move.branch.end());
  return move;
}

}  // namespace steiner::testing

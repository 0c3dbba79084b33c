#include "steiner/graph.hpp"

#include "steiner/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace steiner {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
}

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a >= order() || b >= order()) {
    throw PreconditionError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range for order " +
                            std::to_string(order()));
  }
  if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
  auto& la = adjacency_[a];
  auto pos = std::lower_bound(la.begin(), la.end(), b);
  if (pos != la.end() && *pos == b) {
    throw PreconditionError("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  la.insert(pos, b);
  auto& lb = adjacency_[b];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++edge_count_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  if (a >= order() || b >= order() || !adjacent(a, b)) {
    throw PreconditionError("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  auto& la = adjacency_[a];
  la.erase(std::lower_bound(la.begin(), la.end(), b));
  auto& lb = adjacency_[b];
  lb.erase(std::lower_bound(lb.begin(), lb.end(), a));
  --edge_count_;
}

DistanceMatrix::DistanceMatrix(std::size_t order) : order_(order), cells_(order * order, kUnreachable) {}

Distance DistanceMatrix::at(Vertex a, Vertex b) const {
  const std::uint32_t d = cells_.at(static_cast<std::size_t>(a) * order_ + b);
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::uint32_t DistanceMatrix::finite(Vertex a, Vertex b) const {
  const Distance d = at(a, b);
  if (!d) throw PreconditionError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are disconnected");
  return *d;
}

void DistanceMatrix::set(Vertex a, Vertex b, Distance d) {
  cells_.at(static_cast<std::size_t>(a) * order_ + b) = d ? *d : kUnreachable;
}

std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<Distance> dist(g.order());
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (s >= g.order()) throw PreconditionError("source " + std::to_string(s) + " out of range");
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) m.set(s, t, row[t]);
  }
  return m;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, Vertex{0});
  return std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d.has_value(); });
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex cut = 0; cut < g.order(); ++cut) {
    Graph h = g;
    for (Vertex y : g.neighbors(cut)) h.remove_edge(cut, y);
    const Vertex start = cut == 0 ? 1 : 0;
    const auto dist = bfs_distances(h, start);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != cut && !dist[v]) return false;
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

bool has_triangle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    const auto nu = g.neighbors(e.u);
    const auto nv = g.neighbors(e.v);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a == *b) return true;
      if (*a < *b) {
        ++a;
      } else {
        ++b;
      }
    }
  }
  return false;
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const Distance& d : bfs_distances(g, s)) {
      if (!d) throw PreconditionError("diameter of a disconnected graph");
      best = std::max(best, *d);
    }
  }
  return best;
}

RelabelledGraph power_graph(const Graph& g, unsigned p, std::span<const Vertex> restrict_to) {
  if (p == 0) throw PreconditionError("power_graph requires p >= 1");
  std::vector<Vertex> keep(restrict_to.begin(), restrict_to.end());
  if (keep.empty()) {
    keep.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) keep[v] = v;
  }
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("power_graph restriction contains a repeated vertex");
  }

  RelabelledGraph out{Graph(keep.size()), keep};
  for (Vertex i = 0; i < keep.size(); ++i) {
    const auto dist = bfs_distances(g, keep[i]);
    for (Vertex j = i + 1; j < keep.size(); ++j) {
      const Distance d = dist.at(keep[j]);
      if (d && *d >= 1 && *d <= p) out.graph.add_edge(i, j);
    }
  }
  return out;
}

Vertex LineGraph::vertex_of(Edge e) const {
  auto pos = std::lower_bound(edge_of.begin(), edge_of.end(), e);
  if (pos == edge_of.end() || *pos != e) {
    throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in host graph");
  }
  return static_cast<Vertex>(pos - edge_of.begin());
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edges();
  out.graph = Graph(out.edge_of.size());
  // Edges through a common vertex form a clique in the line graph.
  std::vector<std::vector<Vertex>> incident(g.order());
  for (Vertex i = 0; i < out.edge_of.size(); ++i) {
    incident[out.edge_of[i].u].push_back(i);
    incident[out.edge_of[i].v].push_back(i);
  }
  for (const auto& group : incident) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) out.graph.add_edge(group[a], group[b]);
    }
  }
  return out;
}

std::uint32_t edge_distance(const DistanceMatrix& dist, Edge e1, Edge e2) {
  return std::min({dist.finite(e1.u, e2.u), dist.finite(e1.u, e2.v), dist.finite(e1.v, e2.u),
                   dist.finite(e1.v, e2.v)});
}

std::uint32_t edge_distance(const Graph& g, Edge e1, Edge e2) {
  if (!g.adjacent(e1.u, e1.v) || !g.adjacent(e2.u, e2.v)) throw PreconditionError("edge_distance on a non-edge");
  const Vertex ends1[] = {e1.u, e1.v};
  const auto dist = bfs_distances(g, ends1);
  const Distance a = dist[e2.u];
  const Distance b = dist[e2.v];
  if (!a && !b) throw PreconditionError("edges lie in different components");
  if (!a) return *b;
  if (!b) return *a;
  return std::min(*a, *b);
}

}  // namespace steiner

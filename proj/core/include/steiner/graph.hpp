#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace steiner {

using Vertex = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Normalises endpoint order; throws PreconditionError on a loop.
  Edge(Vertex a, Vertex b);

  bool contains(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Throws PreconditionError on loops, duplicate edges or out-of-range ids.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Minimum degree; 0 for the empty graph.
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Hop distance; std::nullopt is the unreachable marker.
using Distance = std::optional<std::uint32_t>;

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  Distance at(Vertex a, Vertex b) const;
  /// Throws PreconditionError when b is unreachable from a.
  std::uint32_t finite(Vertex a, Vertex b) const;
  void set(Vertex a, Vertex b, Distance d);

 private:
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> cells_;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Multi-source BFS: distance of every vertex to the nearest source.
std::vector<Distance> bfs_distances(const Graph& g, std::span<const Vertex> sources);

DistanceMatrix all_pairs_distances(const Graph& g);

/// True for n <= 1.
bool is_connected(const Graph& g);

/// Connected, n >= 3 and no cut vertex.
bool is_two_connected(const Graph& g);

bool is_tree(const Graph& g);

bool has_triangle(const Graph& g);

/// Largest finite distance; throws PreconditionError when disconnected.
std::uint32_t diameter(const Graph& g);

/// Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in the given
/// order. `original[i]` is the host vertex behind new vertex i.
struct RelabelledGraph {
  Graph graph;
  std::vector<Vertex> original;
};

/// g^p on `restrict_to` (all vertices when empty): u ~ v iff 1 <= d(u,v) <= p.
RelabelledGraph power_graph(const Graph& g, unsigned p, std::span<const Vertex> restrict_to = {});

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // line-graph vertex -> host edge (lexicographic)

  /// Line-graph vertex for a host edge; throws PreconditionError if absent.
  Vertex vertex_of(Edge e) const;
};

LineGraph line_graph(const Graph& g);

/// Minimum of the four endpoint distances; 0 for incident or equal edges.
std::uint32_t edge_distance(const DistanceMatrix& dist, Edge e1, Edge e2);
std::uint32_t edge_distance(const Graph& g, Edge e1, Edge e2);

}  // namespace steiner

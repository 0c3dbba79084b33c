#include "steiner/constructors.hpp"

#include "steiner/errors.hpp"
#include "steiner/steiner.hpp"
#include "steiner/tree_transforms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace steiner {

namespace {

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

std::uint32_t finite_or_far(const Distance& d) { return d ? *d : kFar; }

Graph tree_from_edges(std::size_t order, const std::vector<Edge>& edges) {
  return Graph::from_edges(order, edges);
}

// Incrementally grown forest T_i plus the bookkeeping shared by both
// constructions.
class TreeBuilder {
 public:
  explicit TreeBuilder(const Graph& g) : g_(g), in_tree_(g.order(), false) {}

  bool contains(Vertex v) const { return in_tree_[v]; }

  void add_vertex(Vertex v) {
    if (in_tree_[v]) throw Error("construction invariant violated: anchor stars overlap at vertex " + std::to_string(v));
    in_tree_[v] = true;
  }

  void add_edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

  // Star on N[a].
  void add_star(Vertex a) {
    add_vertex(a);
    for (Vertex y : g_.neighbors(a)) {
      add_vertex(y);
      add_edge(a, y);
    }
  }

  // Double star on N(u) + N(v) for an edge uv of a triangle-free graph.
  void add_double_star(Edge b) {
    add_vertex(b.u);
    add_vertex(b.v);
    add_edge(b.u, b.v);
    for (Vertex end : {b.u, b.v}) {
      for (Vertex y : g_.neighbors(end)) {
        if (y == b.other(end)) continue;
        add_vertex(y);
        add_edge(end, y);
      }
    }
  }

  // Smallest (x, y) with x in `part` (not yet in the tree), y a tree neighbour.
  Edge connector(std::vector<Vertex> part) const {
    std::sort(part.begin(), part.end());
    for (Vertex x : part) {
      for (Vertex y : g_.neighbors(x)) {
        if (in_tree_[y]) return Edge(x, y);
      }
    }
    throw Error("construction invariant violated: no connector edge to the grown tree");
  }

  std::vector<Edge> take_edges() {
    std::sort(edges_.begin(), edges_.end());
    return std::move(edges_);
  }

 private:
  const Graph& g_;
  std::vector<bool> in_tree_;
  std::vector<Edge> edges_;
};

std::vector<Vertex> closed_neighbourhood(const Graph& g, Vertex a) {
  std::vector<Vertex> out(g.neighbors(a).begin(), g.neighbors(a).end());
  out.push_back(a);
  return out;
}

std::vector<Vertex> double_star_vertices(const Graph& g, Edge b) {
  std::vector<Vertex> out;
  for (Vertex end : {b.u, b.v}) out.insert(out.end(), g.neighbors(end).begin(), g.neighbors(end).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Nearest anchor of every vertex in `tree`, ties to the smaller anchor id.
std::vector<Vertex> nearest_anchor(const Graph& tree, std::vector<Vertex> anchors) {
  std::sort(anchors.begin(), anchors.end());
  const std::size_t n = tree.order();
  std::vector<Vertex> best(n, 0);
  std::vector<std::uint32_t> best_d(n, kFar);
  for (Vertex a : anchors) {
    const auto d = bfs_distances(tree, a);
    for (Vertex v = 0; v < n; ++v) {
      const std::uint32_t dv = finite_or_far(d[v]);
      if (dv < best_d[v]) {
        best_d[v] = dv;
        best[v] = a;
      }
    }
  }
  return best;
}

std::vector<std::uint64_t> tally(std::size_t order, const std::vector<Vertex>& assignment) {
  std::vector<std::uint64_t> c(order, 0);
  for (Vertex a : assignment) ++c[a];
  return c;
}

}  // namespace

Graph PackingCertificate::tree() const { return tree_from_edges(order, tree_edges); }
Graph MatchingCertificate::tree() const { return tree_from_edges(order, tree_edges); }

std::vector<Vertex> MatchingCertificate::matched_vertices() const {
  std::vector<Vertex> out;
  for (const Edge& b : matching) {
    out.push_back(b.u);
    out.push_back(b.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PackingCertificate packing_spanning_tree(const Graph& g, Vertex start) {
  if (g.order() == 0) throw PreconditionError("packing construction needs at least one vertex");
  if (start >= g.order()) throw PreconditionError("start vertex out of range");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");

  PackingCertificate cert;
  cert.order = g.order();
  TreeBuilder builder(g);
  cert.anchors.push_back(start);
  builder.add_star(start);

  std::vector<Distance> to_anchors;
  while (true) {
    to_anchors = bfs_distances(g, std::span<const Vertex>(cert.anchors));
    Vertex next = 0;
    while (next < g.order() && to_anchors[next] != 3u) ++next;
    if (next == g.order()) break;
    const Edge link = builder.connector(closed_neighbourhood(g, next));
    builder.add_star(next);
    builder.add_edge(link.u, link.v);
    cert.anchors.push_back(next);
    cert.connectors.push_back(link);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (finite_or_far(to_anchors[v]) > 2) {
      throw Error("construction invariant violated: vertex " + std::to_string(v) + " farther than 2 from the packing");
    }
  }

  // T_0 is frozen here: later attachments must land on T_0 itself.
  std::vector<Vertex> pending;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!builder.contains(v)) pending.push_back(v);
  }
  for (Vertex v : pending) {
    const auto nbrs = g.neighbors(v);
    const auto it = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex y) { return builder.contains(y); });
    if (it == nbrs.end()) throw Error("construction invariant violated: vertex without a neighbour in T_0");
    builder.add_edge(v, *it);
  }
  for (Vertex v : pending) builder.add_vertex(v);

  cert.tree_edges = builder.take_edges();
  cert.assignment = nearest_anchor(cert.tree(), cert.anchors);
  cert.weights = tally(cert.order, cert.assignment);
  return cert;
}

MatchingCertificate matching_spanning_tree(const Graph& g, Edge start) {
  if (g.size() == 0) throw PreconditionError("matching construction needs at least one edge");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  if (has_triangle(g)) throw PreconditionError("graph contains a triangle");
  if (start.v >= g.order() || !g.adjacent(start.u, start.v)) throw PreconditionError("start edge is not an edge of the graph");

  MatchingCertificate cert;
  cert.order = g.order();
  TreeBuilder builder(g);
  cert.matching.push_back(start);
  builder.add_double_star(start);

  const std::vector<Edge> all_edges = g.edges();
  std::vector<Distance> to_matched;
  while (true) {
    const std::vector<Vertex> matched = cert.matched_vertices();
    to_matched = bfs_distances(g, std::span<const Vertex>(matched));
    const auto next = std::find_if(all_edges.begin(), all_edges.end(), [&](const Edge& e) {
      return std::min(finite_or_far(to_matched[e.u]), finite_or_far(to_matched[e.v])) == 3;
    });
    if (next == all_edges.end()) break;
    const Edge link = builder.connector(double_star_vertices(g, *next));
    builder.add_double_star(*next);
    builder.add_edge(link.u, link.v);
    cert.matching.push_back(*next);
    cert.connectors.push_back(link);
  }
  for (const Edge& e : all_edges) {
    if (std::min(finite_or_far(to_matched[e.u]), finite_or_far(to_matched[e.v])) > 2) {
      throw Error("construction invariant violated: edge farther than 2 from the matching");
    }
  }

  // BFS outward from T_0; each vertex hangs from the vertex that discovered it.
  std::vector<Vertex> frontier;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (builder.contains(v)) frontier.push_back(v);
  }
  std::vector<bool> reached(g.order(), false);
  for (Vertex v : frontier) reached[v] = true;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Vertex x = frontier[i];
    for (Vertex y : g.neighbors(x)) {
      if (reached[y]) continue;
      reached[y] = true;
      builder.add_edge(x, y);
      frontier.push_back(y);
    }
  }

  cert.tree_edges = builder.take_edges();
  cert.assignment = nearest_anchor(cert.tree(), cert.matched_vertices());
  cert.weights = tally(cert.order, cert.assignment);
  return cert;
}

// ---------------------------------------------------------------------------
// Verification

bool CertificateReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }) &&
         std::all_of(bounds.begin(), bounds.end(), [](const BoundReport& b) { return b.pass; });
}

const Check* CertificateReport::find_check(std::string_view name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const BoundReport* CertificateReport::find_bound(std::string_view name) const {
  for (const BoundReport& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

namespace {

class CheckList {
 public:
  explicit CheckList(CertificateReport& report) : report_(report) {}

  // Records the first failure message, or a pass.
  void add(std::string name, const std::string& failure) {
    report_.checks.push_back({std::move(name), failure.empty(), failure});
  }

  bool all_passed() const {
    return std::all_of(report_.checks.begin(), report_.checks.end(), [](const Check& c) { return c.passed; });
  }

 private:
  CertificateReport& report_;
};

std::string edge_str(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::string check_shape(const Graph& g, std::size_t order, const std::vector<std::uint64_t>& weights,
                        const std::vector<Vertex>& assignment) {
  if (order != g.order()) return "certificate order " + std::to_string(order) + " != graph order " + std::to_string(g.order());
  if (weights.size() != order) return "weight vector has wrong length";
  if (assignment.size() != order) return "assignment vector has wrong length";
  for (Vertex a : assignment) {
    if (a >= order) return "assignment refers to vertex out of range";
  }
  return {};
}

std::string check_spanning_tree(const Graph& g, const std::vector<Edge>& tree_edges, Graph& tree_out) {
  for (const Edge& e : tree_edges) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v)) return "tree edge " + edge_str(e) + " is not an edge of G";
  }
  try {
    tree_out = Graph::from_edges(g.order(), tree_edges);
  } catch (const PreconditionError& err) {
    return err.what();
  }
  if (!is_tree(tree_out)) return "edge set is not a spanning tree";
  return {};
}

std::string check_connectors(const Graph& tree, std::size_t anchors, const std::vector<Edge>& connectors) {
  if (connectors.size() + 1 != anchors) {
    return std::to_string(connectors.size()) + " connectors for " + std::to_string(anchors) + " anchors";
  }
  for (const Edge& e : connectors) {
    if (e.v >= tree.order() || !tree.adjacent(e.u, e.v)) return "connector " + edge_str(e) + " not in T";
  }
  return {};
}

// c must equal the tally of the assignment and vanish off the anchor set.
std::string check_weight_tally(const std::vector<std::uint64_t>& weights, const std::vector<Vertex>& assignment,
                               const std::vector<Vertex>& anchor_set) {
  const std::vector<std::uint64_t> expected = tally(weights.size(), assignment);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < weights.size(); ++v) {
    total += weights[v];
    if (weights[v] != expected[v]) return "c(" + std::to_string(v) + ") disagrees with the assignment";
    if (weights[v] > 0 && !std::binary_search(anchor_set.begin(), anchor_set.end(), v)) {
      return "positive weight on non-anchor " + std::to_string(v);
    }
  }
  if (total != weights.size()) return "total weight " + std::to_string(total) + " != n";
  return {};
}

// a_v in the anchor set, nearest in T, and within `reach` edges.
std::string check_assignment(const Graph& tree, const std::vector<Vertex>& assignment,
                             const std::vector<Vertex>& anchor_set, std::uint32_t reach) {
  const auto nearest = bfs_distances(tree, std::span<const Vertex>(anchor_set));
  for (Vertex v = 0; v < tree.order(); ++v) {
    const Vertex a = assignment[v];
    if (!std::binary_search(anchor_set.begin(), anchor_set.end(), a)) {
      return "a_" + std::to_string(v) + " = " + std::to_string(a) + " is not an anchor";
    }
    const std::uint32_t d = finite_or_far(bfs_distances(tree, a)[v]);
    if (d != finite_or_far(nearest[v])) return "a_" + std::to_string(v) + " is not a nearest anchor in T";
    if (d > reach) return "P_" + std::to_string(v) + " has " + std::to_string(d) + " edges";
  }
  return {};
}

std::string check_stars(const Graph& g, const Graph& tree, const std::vector<std::vector<Vertex>>& stars,
                        const std::vector<std::vector<Edge>>& star_edges) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < stars.size(); ++i) {
    for (Vertex v : stars[i]) {
      if (owner[v] >= 0) return "anchor stars " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share vertex " + std::to_string(v);
      owner[v] = static_cast<int>(i);
    }
    for (const Edge& e : star_edges[i]) {
      if (!tree.adjacent(e.u, e.v)) return "star edge " + edge_str(e) + " missing from T";
    }
  }
  return {};
}

BoundReport compare(std::string name, BoundParams params, const Rational& rhs, const BigInt& measured) {
  return make_report(std::move(name), params, rhs, Rational(measured));
}

void verify_packing(const PackingCertificate& cert, const Graph& g, unsigned k, CertificateReport& report) {
  CheckList checks(report);
  const std::string shape = check_shape(g, cert.order, cert.weights, cert.assignment);
  checks.add("shape", shape);
  if (!shape.empty()) return;
  for (Vertex a : cert.anchors) {
    if (a >= g.order()) {
      checks.add("anchors_in_range", "anchor " + std::to_string(a) + " out of range");
      return;
    }
  }

  Graph tree;
  const std::string spanning = check_spanning_tree(g, cert.tree_edges, tree);
  checks.add("spanning_tree", spanning);
  if (!spanning.empty()) return;

  const std::size_t n = g.order();
  const std::uint64_t delta = g.min_degree();
  std::vector<Vertex> anchor_set = cert.anchors;
  std::sort(anchor_set.begin(), anchor_set.end());

  {
    std::string failure;
    if (cert.anchors.empty()) failure = "no anchors";
    if (std::adjacent_find(anchor_set.begin(), anchor_set.end()) != anchor_set.end()) failure = "repeated anchor";
    for (std::size_t i = 0; failure.empty() && i < cert.anchors.size(); ++i) {
      const auto d = bfs_distances(g, cert.anchors[i]);
      for (std::size_t j = i + 1; j < cert.anchors.size(); ++j) {
        if (finite_or_far(d[cert.anchors[j]]) < 3) {
          failure = "anchors " + std::to_string(cert.anchors[i]) + " and " + std::to_string(cert.anchors[j]) +
                    " closer than 3";
          break;
        }
      }
    }
    checks.add("packing", failure);
  }
  if (cert.anchors.empty()) return;
  {
    std::string failure;
    const auto d = bfs_distances(g, std::span<const Vertex>(anchor_set));
    for (Vertex v = 0; v < n; ++v) {
      if (finite_or_far(d[v]) > 2) {
        failure = "vertex " + std::to_string(v) + " farther than 2 from A";
        break;
      }
    }
    checks.add("coverage_within_2", failure);
  }
  {
    std::string failure;
    for (Vertex a : cert.anchors) {
      if (cert.weights[a] < delta + 1) {
        failure = "c(" + std::to_string(a) + ") = " + std::to_string(cert.weights[a]) + " < delta+1 = " +
                  std::to_string(delta + 1);
        break;
      }
    }
    checks.add("anchor_weight", failure);
  }
  checks.add("weight_tally", check_weight_tally(cert.weights, cert.assignment, anchor_set));
  checks.add("nearest_anchor_paths", check_assignment(tree, cert.assignment, anchor_set, 2));
  checks.add("connectors", check_connectors(tree, cert.anchors.size(), cert.connectors));
  {
    std::vector<std::vector<Vertex>> stars;
    std::vector<std::vector<Edge>> star_edges;
    for (Vertex a : cert.anchors) {
      stars.push_back(closed_neighbourhood(g, a));
      star_edges.emplace_back();
      for (Vertex y : g.neighbors(a)) star_edges.back().emplace_back(a, y);
    }
    checks.add("anchor_stars", check_stars(g, tree, stars, star_edges));
  }
  const RelabelledGraph power = power_graph(tree, 3, cert.anchors);
  checks.add("power3_connected", is_connected(power.graph) ? "" : "T^3[A] is disconnected");

  if (delta == 0) return;  // K_1: no degree-based bound applies
  const BigInt sw_tree = sw_k_tree(tree, k);
  BoundParams params{n, delta, k, std::nullopt, std::nullopt};
  report.bounds.push_back(make_report("theorem4", params, bound_theorem4(n, delta, k), Rational(sw_tree),
                                      Rational((n - 1) * binomial(n, k))));
  if (!checks.all_passed()) return;

  // Intermediate inequalities of the construction.
  const BigInt choose = binomial(n, k);
  const WeightFn c(cert.weights);
  const BigInt sw_weighted = sw_k_weighted_tree(tree, c, k);
  report.bounds.push_back(compare("tree_vs_weighted", params, Rational(sw_weighted + 2 * k * choose), sw_tree));

  std::vector<std::uint64_t> restricted;
  for (Vertex a : power.original) restricted.push_back(cert.weights[a]);
  const BigInt sw_power = sw_k_weighted(power.graph, WeightFn(restricted), k);
  report.bounds.push_back(compare("weighted_vs_power3", params, Rational(3 * sw_power), sw_weighted));

  BoundParams lemma{std::nullopt, std::nullopt, k, n, delta + 1};
  report.bounds.push_back(compare("power3_vs_fundamental", lemma, fundamental_bound(n, delta + 1, k), sw_power));
}

void verify_matching(const MatchingCertificate& cert, const Graph& g, unsigned k, CertificateReport& report) {
  CheckList checks(report);
  const std::string shape = check_shape(g, cert.order, cert.weights, cert.assignment);
  checks.add("shape", shape);
  if (!shape.empty()) return;
  for (const Edge& b : cert.matching) {
    if (b.v >= g.order() || !g.adjacent(b.u, b.v)) {
      checks.add("matching_edges", "matching edge " + edge_str(b) + " is not an edge of G");
      return;
    }
  }
  if (cert.matching.empty()) {
    checks.add("matching_edges", "empty matching");
    return;
  }

  Graph tree;
  const std::string spanning = check_spanning_tree(g, cert.tree_edges, tree);
  checks.add("spanning_tree", spanning);
  if (!spanning.empty()) return;
  checks.add("triangle_free", has_triangle(g) ? "G contains a triangle" : "");

  const std::size_t n = g.order();
  const std::uint64_t delta = g.min_degree();
  const std::vector<Vertex> matched = cert.matched_vertices();
  const DistanceMatrix dist = all_pairs_distances(g);

  {
    std::string failure;
    if (matched.size() != 2 * cert.matching.size()) failure = "matching edges share a vertex";
    for (std::size_t i = 0; failure.empty() && i < cert.matching.size(); ++i) {
      for (std::size_t j = i + 1; j < cert.matching.size(); ++j) {
        if (edge_distance(dist, cert.matching[i], cert.matching[j]) < 3) {
          failure = "edges " + edge_str(cert.matching[i]) + " and " + edge_str(cert.matching[j]) + " closer than 3";
          break;
        }
      }
    }
    checks.add("matching_distance", failure);
  }
  {
    std::string failure;
    for (const Edge& e : g.edges()) {
      std::uint32_t best = kFar;
      for (const Edge& b : cert.matching) best = std::min(best, edge_distance(dist, e, b));
      if (best > 2) {
        failure = "edge " + edge_str(e) + " farther than 2 from M";
        break;
      }
    }
    checks.add("edge_coverage_within_2", failure);
  }
  const auto to_matched_g = bfs_distances(g, std::span<const Vertex>(matched));
  {
    std::string failure;
    for (Vertex v = 0; v < n; ++v) {
      if (finite_or_far(to_matched_g[v]) > 3) {
        failure = "vertex " + std::to_string(v) + " farther than 3 from V(M)";
        break;
      }
    }
    checks.add("vertex_coverage_within_3", failure);
  }
  {
    std::string failure;
    for (Vertex a : matched) {
      if (cert.weights[a] < delta) {
        failure = "c(" + std::to_string(a) + ") = " + std::to_string(cert.weights[a]) + " < delta = " + std::to_string(delta);
        break;
      }
    }
    checks.add("anchor_weight", failure);
  }
  {
    std::string failure;
    for (const Edge& b : cert.matching) {
      if (cert.weights[b.u] + cert.weights[b.v] < 2 * delta) {
        failure = "c'(" + edge_str(b) + ") < 2 delta";
        break;
      }
    }
    checks.add("pair_weight", failure);
  }
  checks.add("weight_tally", check_weight_tally(cert.weights, cert.assignment, matched));
  checks.add("nearest_anchor_paths", check_assignment(tree, cert.assignment, matched, 3));
  checks.add("connectors", check_connectors(tree, cert.matching.size(), cert.connectors));
  {
    std::vector<std::vector<Vertex>> stars;
    std::vector<std::vector<Edge>> star_edges;
    for (const Edge& b : cert.matching) {
      stars.push_back(double_star_vertices(g, b));
      star_edges.emplace_back();
      for (Vertex end : {b.u, b.v}) {
        for (Vertex y : g.neighbors(end)) star_edges.back().emplace_back(end, y);
      }
    }
    checks.add("anchor_stars", check_stars(g, tree, stars, star_edges));
  }
  const LineGraph line = line_graph(tree);
  std::vector<Vertex> matching_in_line;
  for (const Edge& b : cert.matching) {
    if (!tree.adjacent(b.u, b.v)) {
      checks.add("line_power4_connected", "matching edge " + edge_str(b) + " not in T");
      return;
    }
    matching_in_line.push_back(line.vertex_of(b));
  }
  const RelabelledGraph power = power_graph(line.graph, 4, matching_in_line);
  checks.add("line_power4_connected", is_connected(power.graph) ? "" : "L^4[M] is disconnected");
  {
    std::string failure;
    const auto to_matched_t = bfs_distances(tree, std::span<const Vertex>(matched));
    for (Vertex v = 0; v < n; ++v) {
      if (to_matched_t[v] != to_matched_g[v]) {
        failure = "d_T(" + std::to_string(v) + ", V(M)) != d_G(" + std::to_string(v) + ", V(M))";
        break;
      }
    }
    checks.add("distance_preservation", failure);
  }

  const BigInt sw_tree = sw_k_tree(tree, k);
  BoundParams params{n, delta, k, std::nullopt, std::nullopt};
  report.bounds.push_back(make_report("theorem5", params, bound_theorem5(n, delta, k), Rational(sw_tree),
                                      Rational((n - 1) * binomial(n, k))));
  if (!checks.all_passed()) return;

  const BigInt choose = binomial(n, k);
  const WeightFn c(cert.weights);
  const BigInt sw_weighted = sw_k_weighted_tree(tree, c, k);
  report.bounds.push_back(compare("tree_vs_weighted", params, Rational(sw_weighted + 3 * k * choose), sw_tree));

  // c_2 lives on the line-graph vertices of M.
  std::vector<std::uint64_t> line_weights(line.graph.order(), 0);
  for (const Edge& b : cert.matching) line_weights[line.vertex_of(b)] = cert.weights[b.u] + cert.weights[b.v];
  const BigInt sw_line = sw_k_weighted(line.graph, WeightFn(line_weights), k);
  report.bounds.push_back(compare("weighted_vs_line", params, Rational(sw_line + choose), sw_weighted));

  std::vector<std::uint64_t> restricted;
  for (Vertex i : power.original) restricted.push_back(line_weights[i]);
  const BigInt sw_power = sw_k_weighted(power.graph, WeightFn(restricted), k);
  report.bounds.push_back(compare("line_vs_power4", params, Rational(4 * sw_power), sw_line));

  BoundParams lemma{std::nullopt, std::nullopt, k, n, 2 * delta};
  report.bounds.push_back(compare("power4_vs_fundamental", lemma, fundamental_bound(n, 2 * delta, k), sw_power));
}

}  // namespace

CertificateReport verify_certificate(const Certificate& cert, const Graph& g, unsigned k) {
  if (k < 1 || k > g.order()) throw PreconditionError("verify_certificate requires 1 <= k <= n");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  CertificateReport report;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PackingCertificate>) {
          verify_packing(c, g, k, report);
        } else {
          verify_matching(c, g, k, report);
        }
      },
      cert);
  return report;
}

}  // namespace steiner

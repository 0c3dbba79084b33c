#include "steiner/extremal.hpp"

#include "steiner/errors.hpp"
#include "steiner/steiner.hpp"

#include <algorithm>
#include <cassert>

namespace steiner {

Graph sequential_sum(std::span<const Graph> parts) {
  if (parts.empty()) throw PreconditionError("sequential sum of zero graphs");
  std::size_t total = 0;
  for (const Graph& p : parts) total += p.order();
  Graph out(total);
  std::size_t offset = 0;
  std::size_t previous_offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph& part = parts[i];
    for (const Edge& e : part.edges()) out.add_edge(static_cast<Vertex>(offset + e.u), static_cast<Vertex>(offset + e.v));
    if (i > 0) {
      const std::size_t previous_order = parts[i - 1].order();
      for (std::size_t a = 0; a < previous_order; ++a) {
        for (std::size_t b = 0; b < part.order(); ++b) {
          out.add_edge(static_cast<Vertex>(previous_offset + a), static_cast<Vertex>(offset + b));
        }
      }
    }
    previous_offset = offset;
    offset += part.order();
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  const Graph parts[] = {empty_graph(a), empty_graph(b)};
  return sequential_sum(parts);
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

ClassicFamily parse_classic_family(std::string_view name) {
  if (name == "path") return ClassicFamily::path;
  if (name == "cycle") return ClassicFamily::cycle;
  if (name == "star") return ClassicFamily::star;
  if (name == "complete") return ClassicFamily::complete;
  if (name == "complete_bipartite") return ClassicFamily::complete_bipartite;
  throw ParseError("unknown graph family '" + std::string(name) + "'");
}

Graph gen_classic(ClassicFamily family, std::span<const std::size_t> sizes) {
  const std::size_t expected = family == ClassicFamily::complete_bipartite ? 2 : 1;
  if (sizes.size() != expected) {
    throw PreconditionError("family expects " + std::to_string(expected) + " size parameter(s)");
  }
  switch (family) {
    case ClassicFamily::path:
      return path_graph(sizes[0]);
    case ClassicFamily::cycle:
      return cycle_graph(sizes[0]);
    case ClassicFamily::star:
      return star_graph(sizes[0]);
    case ClassicFamily::complete:
      return complete_graph(sizes[0]);
    case ClassicFamily::complete_bipartite:
      return complete_bipartite_graph(sizes[0], sizes[1]);
  }
  throw PreconditionError("unknown family");
}

ExtremalFamily parse_extremal_family(std::string_view name) {
  if (name == "G") return ExtremalFamily::G;
  if (name == "H") return ExtremalFamily::H;
  throw ParseError("unknown extremal family '" + std::string(name) + "' (expected G or H)");
}

std::string_view to_string(ExtremalFamily family) { return family == ExtremalFamily::G ? "G" : "H"; }

void ExtremalSpec::validate() const {
  if (family == ExtremalFamily::G) {
    if (d < 1) throw PreconditionError("G_{d,delta} needs d >= 1");
    if (delta < 2 || (delta + 1) % 3 != 0) throw PreconditionError("G_{d,delta} needs delta+1 divisible by 3");
  } else {
    if (d < 3) throw PreconditionError("H_{d,delta} needs d >= 3");
    if (delta < 2 || delta % 2 != 0) throw PreconditionError("H_{d,delta} needs an even delta >= 2");
  }
}

std::vector<std::size_t> ExtremalSpec::layers() const {
  validate();
  std::vector<std::size_t> out;
  if (family == ExtremalFamily::G) {
    out.push_back(delta);
    out.insert(out.end(), d - 1, (delta + 1) / 3);
    out.push_back(delta);
  } else {
    out = {delta, delta};
    out.insert(out.end(), d - 3, delta / 2);
    out.insert(out.end(), {delta, delta});
  }
  return out;
}

std::size_t ExtremalSpec::order() const {
  validate();
  if (family == ExtremalFamily::G) return (std::size_t{d} + 5) * (delta + 1) / 3 - 2;
  return 4 * std::size_t{delta} + (std::size_t{d} - 3) * delta / 2;
}

Graph generate(const ExtremalSpec& spec) {
  const std::vector<std::size_t> sizes = spec.layers();
  const bool independent_ends = spec.family == ExtremalFamily::H;
  std::vector<Graph> parts;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const bool end_layer = i < 2 || i + 2 >= sizes.size();
    parts.push_back(independent_ends && end_layer ? empty_graph(sizes[i]) : complete_graph(sizes[i]));
  }
  Graph g = sequential_sum(parts);
  if (g.order() != spec.order()) throw Error("generated order disagrees with the closed form");
  return g;
}

Graph gen_G(unsigned d, unsigned delta) { return generate({ExtremalFamily::G, d, delta}); }
Graph gen_H(unsigned d, unsigned delta) { return generate({ExtremalFamily::H, d, delta}); }

std::vector<SweepRow> tightness_sweep(ExtremalFamily family, unsigned delta, unsigned k, unsigned d_min,
                                      unsigned d_max, const BigInt& max_subsets) {
  if (k < 2) throw PreconditionError("tightness sweep needs k >= 2");
  if (d_min > d_max) throw PreconditionError("empty d range");
  std::vector<SweepRow> rows;
  for (unsigned d = d_min; d <= d_max; ++d) {
    const ExtremalSpec spec{family, d, delta};
    const Graph g = generate(spec);
    const std::size_t n = g.order();
    if (k > n) throw PreconditionError("k exceeds the order of the d=" + std::to_string(d) + " instance");
    const BigInt choose = binomial(n, k);
    if (choose > max_subsets) {
      throw PreconditionError("d=" + std::to_string(d) + " needs " + choose.str() + " Steiner evaluations (cap " +
                              max_subsets.str() + ")");
    }
    SweepRow row;
    row.d = d;
    row.n = n;
    row.sw = sw_k(g, k);
    const Rational scale = family == ExtremalFamily::G ? Rational(3 * n, delta + 1) : Rational(2 * n, delta);
    row.bound_term = Rational(k - 1, k + 1) * scale * Rational(choose);
    row.ratio = Rational(row.sw) / row.bound_term;
    row.has_triangle = has_triangle(g);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "d,n,sw_k,bound_term,ratio\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.d) + "," + std::to_string(r.n) + "," + r.sw.str() + "," + to_string(r.bound_term) + "," +
           to_decimal(r.ratio, 6) + "\n";
  }
  return out;
}

}  // namespace steiner

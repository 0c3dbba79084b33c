#pragma once

// Graph families: sequential sums, the extremal layered graphs G_{d,delta}
// and H_{d,delta}, and classic fixtures. Vertices are numbered layer by layer
// from left to right, ascending within a layer.

#include "steiner/exact.hpp"
#include "steiner/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steiner {

/// Disjoint union plus a complete join between consecutive parts.
Graph sequential_sum(std::span<const Graph> parts);

Graph complete_graph(std::size_t n);
/// nK_1, n isolated vertices.
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Throws PreconditionError for n < 3.
Graph cycle_graph(std::size_t n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();

enum class ClassicFamily { path, cycle, star, complete, complete_bipartite };

/// Throws ParseError for an unknown name.
ClassicFamily parse_classic_family(std::string_view name);
/// `sizes` holds one size (two for complete_bipartite).
Graph gen_classic(ClassicFamily family, std::span<const std::size_t> sizes);

enum class ExtremalFamily { G, H };

ExtremalFamily parse_extremal_family(std::string_view name);
std::string_view to_string(ExtremalFamily family);

struct ExtremalSpec {
  ExtremalFamily family = ExtremalFamily::G;
  unsigned d = 1;
  unsigned delta = 2;

  /// Throws PreconditionError when (d, delta) is outside the family's domain:
  /// G needs d >= 1 and delta+1 divisible by 3; H needs d >= 3 and even
  /// delta >= 2.
  void validate() const;
  /// Layer sizes from left to right.
  std::vector<std::size_t> layers() const;
  /// G: (d+5)(delta+1)/3 - 2.  H: 4 delta + (d-3) delta/2.
  std::size_t order() const;
};

/// K_delta + K_{(delta+1)/3} x (d-1) + K_delta.
Graph gen_G(unsigned d, unsigned delta);
/// deltaK_1 + deltaK_1 + K_{delta/2} x (d-3) + deltaK_1 + deltaK_1.
Graph gen_H(unsigned d, unsigned delta);
Graph generate(const ExtremalSpec& spec);

struct SweepRow {
  unsigned d = 0;
  std::size_t n = 0;
  BigInt sw;
  Rational bound_term;  // (k-1)/(k+1) * 3n/(delta+1) * C(n,k) for G, (k-1)/(k+1) * 2n/delta * C(n,k) for H
  Rational ratio;       // sw / bound_term
  bool has_triangle = false;
};

/// Exact SW_k along d = d_min..d_max. Throws PreconditionError when an
/// instance would need more than `max_subsets` Steiner evaluations, or when
/// k < 2 (the leading term vanishes).
std::vector<SweepRow> tightness_sweep(ExtremalFamily family, unsigned delta, unsigned k, unsigned d_min,
                                      unsigned d_max, const BigInt& max_subsets = BigInt(50'000'000));

/// Header `d,n,sw_k,bound_term,ratio`; bound_term as an exact fraction and
/// ratio rounded to 6 decimal places.
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace steiner

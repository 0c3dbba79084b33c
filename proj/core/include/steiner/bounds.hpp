#pragma once

// Closed-form upper bounds on the Wiener index W = SW_2, the Steiner
// k-Wiener index SW_k and the average Steiner k-distance mu_k, evaluated in
// exact rational arithmetic, plus reports comparing them against exactly
// computed values.

#include "steiner/exact.hpp"
#include "steiner/graph.hpp"
#include "steiner/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace steiner {

enum class BoundId {
  eq1,         // W(G) <= (n+1)/3 C(n,2)
  eq2,         // W(G) <= n/2 floor(n^2/4), 2-connected G
  theorem1,    // SW_k(G) <= (k-1)(n+1)/(k+1) C(n,k)
  theorem3,    // W(G) <= (n/(delta+1) + 2) C(n,2)
  lemma2,      // SW_k(T,c) <= fundamental_bound(N, C, k)
  theorem4,    // SW_k(T) for the packing spanning tree T
  corollary1,  // mu_k(G), general graphs
  theorem5,    // SW_k(T) for the matching spanning tree T, triangle-free G
  corollary2,  // mu_k(G), triangle-free G
};

inline constexpr BoundId kAllBounds[] = {BoundId::eq1,      BoundId::eq2,        BoundId::theorem1,
                                         BoundId::theorem3, BoundId::lemma2,     BoundId::theorem4,
                                         BoundId::corollary1, BoundId::theorem5, BoundId::corollary2};

std::string_view to_string(BoundId id);
/// Throws ParseError for an unknown name.
BoundId parse_bound_id(std::string_view name);

struct BoundParams {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> delta;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> total_weight;  // N
  std::optional<std::uint64_t> min_weight;    // C

  friend bool operator==(const BoundParams&, const BoundParams&) = default;
};

std::string format_params(const BoundParams& p);

struct BoundReport {
  std::string name;
  BoundParams params;
  Rational rhs;
  Rational measured;
  Rational slack;  // rhs - measured
  bool pass = false;
  bool vacuous = false;  // rhs at or above the trivial maximum
};

/// Builds a report; `trivial_max`, when given, is the largest value the
/// measured quantity can take on any connected graph of that order, and a
/// bound at or above it is flagged vacuous.
BoundReport make_report(std::string name, BoundParams params, Rational rhs, Rational measured,
                        const std::optional<Rational>& trivial_max = std::nullopt);

Rational bound_path_wiener(std::uint64_t n);
Rational bound_theorem1(std::uint64_t n, std::uint64_t k);
Rational bound_cycle_wiener(std::uint64_t n);
Rational bound_kouider_winkler(std::uint64_t n, std::uint64_t delta);
Rational bound_theorem4(std::uint64_t n, std::uint64_t delta, std::uint64_t k);
Rational bound_corollary1_mu(std::uint64_t n, std::uint64_t delta, std::uint64_t k);
Rational bound_theorem5(std::uint64_t n, std::uint64_t delta, std::uint64_t k);
Rational bound_corollary2_mu(std::uint64_t n, std::uint64_t delta, std::uint64_t k);
Rational bound_fundamental(std::uint64_t total_weight, std::uint64_t min_weight, std::uint64_t k);

/// Evaluates a bound from explicit parameters. Throws PreconditionError when
/// a required parameter is missing or out of range.
Rational evaluate_bound(BoundId id, const BoundParams& p);

/// Structural precondition of a bound on a concrete graph, or std::nullopt
/// when it holds. `weights` only matters for lemma2.
std::optional<std::string> bound_precondition(const Graph& g, BoundId id, unsigned k,
                                              const WeightFn* weights = nullptr);

/// Computes the bounded quantity exactly and compares. theorem4/theorem5
/// measure SW_k of the spanning tree built by the packing/matching
/// construction (started at vertex 0 / the first edge); corollary1/2 measure
/// mu_k(G); lemma2 needs a tree and uses unit weights unless `weights` is
/// given. Throws PreconditionError when bound_precondition fails.
BoundReport check(const Graph& g, BoundId id, unsigned k, const WeightFn* weights = nullptr);

}  // namespace steiner

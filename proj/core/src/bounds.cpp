#include "steiner/bounds.hpp"

#include "steiner/constructors.hpp"
#include "steiner/errors.hpp"
#include "steiner/steiner.hpp"
#include "steiner/tree_transforms.hpp"

#include <array>
#include <utility>

namespace steiner {

namespace {

constexpr std::array<std::pair<BoundId, std::string_view>, 9> kNames{{
    {BoundId::eq1, "eq1"},
    {BoundId::eq2, "eq2"},
    {BoundId::theorem1, "theorem1"},
    {BoundId::theorem3, "theorem3"},
    {BoundId::lemma2, "lemma2"},
    {BoundId::theorem4, "theorem4"},
    {BoundId::corollary1, "corollary1"},
    {BoundId::theorem5, "theorem5"},
    {BoundId::corollary2, "corollary2"},
}};

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

void require_nk(std::uint64_t n, std::uint64_t k) {
  require(n >= 1, "bound requires n >= 1");
  require(k >= 1 && k <= n, "bound requires 1 <= k <= n");
}

std::uint64_t need(const std::optional<std::uint64_t>& value, const char* name, BoundId id) {
  if (!value) throw UsageError(std::string(to_string(id)) + " needs parameter " + name);
  return *value;
}

BigInt wiener(const Graph& g) { return g.order() < 2 ? BigInt(0) : sw_k(g, 2); }

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& [value, name] : kNames) {
    if (value == id) return name;
  }
  return "unknown";
}

BoundId parse_bound_id(std::string_view name) {
  for (const auto& [value, text] : kNames) {
    if (text == name) return value;
  }
  throw ParseError("unknown bound '" + std::string(name) + "'");
}

std::string format_params(const BoundParams& p) {
  std::string out;
  const auto add = [&](const char* key, const std::optional<std::uint64_t>& v) {
    if (!v) return;
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += std::to_string(*v);
  };
  add("n", p.n);
  add("delta", p.delta);
  add("k", p.k);
  add("N", p.total_weight);
  add("C", p.min_weight);
  return out;
}

BoundReport make_report(std::string name, BoundParams params, Rational rhs, Rational measured,
                        const std::optional<Rational>& trivial_max) {
  BoundReport r;
  r.name = std::move(name);
  r.params = params;
  r.slack = rhs - measured;
  r.pass = r.slack >= 0;
  r.vacuous = trivial_max.has_value() && rhs >= *trivial_max;
  r.rhs = std::move(rhs);
  r.measured = std::move(measured);
  return r;
}

Rational bound_path_wiener(std::uint64_t n) {
  require(n >= 1, "eq1 requires n >= 1");
  return Rational(n + 1, 3) * Rational(binomial(n, 2));
}

Rational bound_theorem1(std::uint64_t n, std::uint64_t k) {
  require_nk(n, k);
  return Rational((k - 1) * (n + 1), k + 1) * Rational(binomial(n, k));
}

Rational bound_cycle_wiener(std::uint64_t n) {
  require(n >= 3, "eq2 requires n >= 3");
  return Rational(n, 2) * Rational(n * n / 4);
}

Rational bound_kouider_winkler(std::uint64_t n, std::uint64_t delta) {
  require(n >= 1, "theorem3 requires n >= 1");
  require(delta >= 1, "theorem3 requires delta >= 1");
  return (Rational(n, delta + 1) + 2) * Rational(binomial(n, 2));
}

Rational bound_corollary1_mu(std::uint64_t n, std::uint64_t delta, std::uint64_t k) {
  require_nk(n, k);
  require(delta >= 1, "theorem4 requires delta >= 1");
  return Rational(k - 1, k + 1) * Rational(3 * (n + 1), delta + 1) + Rational(3 * delta, delta + 1) + 2 * k;
}

Rational bound_theorem4(std::uint64_t n, std::uint64_t delta, std::uint64_t k) {
  return bound_corollary1_mu(n, delta, k) * Rational(binomial(n, k));
}

Rational bound_corollary2_mu(std::uint64_t n, std::uint64_t delta, std::uint64_t k) {
  require_nk(n, k);
  require(delta >= 1, "theorem5 requires delta >= 1");
  return Rational(k - 1, k + 1) * Rational(2 * (n + 1), delta) + Rational(4 * delta - 2, delta) + 3 * k + 1;
}

Rational bound_theorem5(std::uint64_t n, std::uint64_t delta, std::uint64_t k) {
  return bound_corollary2_mu(n, delta, k) * Rational(binomial(n, k));
}

Rational bound_fundamental(std::uint64_t total_weight, std::uint64_t min_weight, std::uint64_t k) {
  return fundamental_bound(total_weight, min_weight, static_cast<unsigned>(k));
}

Rational evaluate_bound(BoundId id, const BoundParams& p) {
  switch (id) {
    case BoundId::eq1:
      return bound_path_wiener(need(p.n, "n", id));
    case BoundId::eq2:
      return bound_cycle_wiener(need(p.n, "n", id));
    case BoundId::theorem1:
      return bound_theorem1(need(p.n, "n", id), need(p.k, "k", id));
    case BoundId::theorem3:
      return bound_kouider_winkler(need(p.n, "n", id), need(p.delta, "delta", id));
    case BoundId::lemma2:
      return bound_fundamental(need(p.total_weight, "N", id), need(p.min_weight, "C", id), need(p.k, "k", id));
    case BoundId::theorem4:
      return bound_theorem4(need(p.n, "n", id), need(p.delta, "delta", id), need(p.k, "k", id));
    case BoundId::corollary1:
      return bound_corollary1_mu(need(p.n, "n", id), need(p.delta, "delta", id), need(p.k, "k", id));
    case BoundId::theorem5:
      return bound_theorem5(need(p.n, "n", id), need(p.delta, "delta", id), need(p.k, "k", id));
    case BoundId::corollary2:
      return bound_corollary2_mu(need(p.n, "n", id), need(p.delta, "delta", id), need(p.k, "k", id));
  }
  throw PreconditionError("unknown bound");
}

std::optional<std::string> bound_precondition(const Graph& g, BoundId id, unsigned k, const WeightFn* weights) {
  const std::size_t n = g.order();
  if (n == 0) return "graph has no vertices";
  if (!is_connected(g)) return "graph is disconnected";
  const bool uses_k = id != BoundId::eq1 && id != BoundId::eq2 && id != BoundId::theorem3;
  switch (id) {
    case BoundId::eq1:
      break;
    case BoundId::eq2:
      if (!is_two_connected(g)) return "graph is not 2-connected";
      break;
    case BoundId::theorem3:
    case BoundId::theorem4:
    case BoundId::corollary1:
      if (g.min_degree() < 1) return "minimum degree is 0";
      break;
    case BoundId::theorem5:
    case BoundId::corollary2:
      if (has_triangle(g)) return "not triangle-free";
      if (g.min_degree() < 1) return "minimum degree is 0";
      break;
    case BoundId::lemma2: {
      if (!is_tree(g)) return "not a tree";
      if (weights != nullptr) {
        if (weights->order() != n) return "weight map does not match the graph";
        if (weights->min() < 1) return "minimum weight C is 0";
        if (k < 1 || k > weights->total()) return "k outside 1..N";
        return std::nullopt;
      }
      break;
    }
    case BoundId::theorem1:
      break;
  }
  if (uses_k && (k < 1 || k > n)) return "k outside 1..n";
  return std::nullopt;
}

BoundReport check(const Graph& g, BoundId id, unsigned k, const WeightFn* weights) {
  if (const auto problem = bound_precondition(g, id, k, weights)) {
    throw PreconditionError(std::string(to_string(id)) + ": " + *problem);
  }
  const std::uint64_t n = g.order();
  const std::uint64_t delta = g.min_degree();
  const std::string name(to_string(id));
  const Rational wiener_max = Rational((n - 1) * binomial(n, 2));

  switch (id) {
    case BoundId::eq1:
      return make_report(name, {n, {}, 2, {}, {}}, bound_path_wiener(n), Rational(wiener(g)), wiener_max);
    case BoundId::eq2:
      return make_report(name, {n, {}, 2, {}, {}}, bound_cycle_wiener(n), Rational(wiener(g)), wiener_max);
    case BoundId::theorem1:
      return make_report(name, {n, {}, k, {}, {}}, bound_theorem1(n, k), Rational(sw_k(g, k)),
                         Rational((n - 1) * binomial(n, k)));
    case BoundId::theorem3:
      return make_report(name, {n, delta, 2, {}, {}}, bound_kouider_winkler(n, delta), Rational(wiener(g)),
                         wiener_max);
    case BoundId::lemma2: {
      const WeightFn c = weights != nullptr ? *weights : WeightFn::uniform(n, 1);
      const std::uint64_t total = c.total();
      return make_report(name, {n, {}, k, total, c.min()}, fundamental_bound(total, c.min(), k),
                         Rational(sw_k_weighted_tree(g, c, k)), Rational((n - 1) * binomial(total, k)));
    }
    case BoundId::theorem4: {
      const Graph tree = packing_spanning_tree(g, 0).tree();
      return make_report(name, {n, delta, k, {}, {}}, bound_theorem4(n, delta, k), Rational(sw_k_tree(tree, k)),
                         Rational((n - 1) * binomial(n, k)));
    }
    case BoundId::corollary1:
      return make_report(name, {n, delta, k, {}, {}}, bound_corollary1_mu(n, delta, k), mu_k(g, k),
                         Rational(n - 1));
    case BoundId::theorem5: {
      const Graph tree = matching_spanning_tree(g, g.edges().front()).tree();
      return make_report(name, {n, delta, k, {}, {}}, bound_theorem5(n, delta, k), Rational(sw_k_tree(tree, k)),
                         Rational((n - 1) * binomial(n, k)));
    }
    case BoundId::corollary2:
      return make_report(name, {n, delta, k, {}, {}}, bound_corollary2_mu(n, delta, k), mu_k(g, k),
                         Rational(n - 1));
  }
  throw PreconditionError("unknown bound");
}

}  // namespace steiner

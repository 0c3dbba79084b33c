#include "steiner/steiner.hpp"

#include "steiner/combinatorics.hpp"
#include "steiner/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace steiner {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

std::vector<std::uint32_t> flat_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> out(n * n);
  for (Vertex s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (!row[t]) throw PreconditionError("graph is disconnected");
      out[s * n + t] = *row[t];
    }
  }
  return out;
}

void require_k(unsigned k, std::uint64_t limit, const char* what) {
  if (k < 1 || k > limit) {
    throw PreconditionError("k = " + std::to_string(k) + " outside 1.." + std::to_string(limit) + " (" + what + ")");
  }
}

void require_weights(const Graph& g, const WeightFn& c) {
  if (c.order() != g.order()) {
    throw PreconditionError("weight map covers " + std::to_string(c.order()) + " vertices, graph has " +
                            std::to_string(g.order()));
  }
}

// C(x, k) for a fixed k, tabulated when the weight total is small.
class BinomialColumn {
 public:
  BinomialColumn(std::uint64_t limit, unsigned k) : k_(k) {
    if (limit <= kTableLimit) {
      table_.reserve(limit + 1);
      for (std::uint64_t x = 0; x <= limit; ++x) table_.push_back(binomial(x, k));
    }
  }

  BigInt operator()(std::uint64_t x) const { return x < table_.size() ? table_[x] : binomial(x, k_); }

 private:
  static constexpr std::uint64_t kTableLimit = 1 << 16;
  unsigned k_;
  std::vector<BigInt> table_;
};

}  // namespace

TerminalSet::TerminalSet(std::initializer_list<Vertex> vertices)
    : TerminalSet(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

TerminalSet::TerminalSet(std::span<const Vertex> vertices) : vertices_(vertices.begin(), vertices.end()) {
  if (vertices_.empty()) throw PreconditionError("terminal set is empty");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

SteinerSolver::SteinerSolver(const Graph& g) : order_(g.order()), dist_(flat_distances(g)) {}

std::uint32_t SteinerSolver::distance(std::span<const Vertex> terminals) {
  for (Vertex t : terminals) {
    if (t >= order_) throw PreconditionError("terminal " + std::to_string(t) + " out of range");
  }
  switch (terminals.size()) {
    case 0:
      throw PreconditionError("terminal set is empty");
    case 1:
      return 0;
    case 2:
      return pair_distance(terminals[0], terminals[1]);
    case 3: {
      // Three terminals: the Steiner tree is three paths meeting at one vertex.
      std::uint32_t best = kInf;
      const std::uint32_t* a = &dist_[terminals[0] * order_];
      const std::uint32_t* b = &dist_[terminals[1] * order_];
      const std::uint32_t* c = &dist_[terminals[2] * order_];
      for (std::size_t v = 0; v < order_; ++v) best = std::min(best, a[v] + b[v] + c[v]);
      return best;
    }
    default:
      return dreyfus_wagner(terminals);
  }
}

std::uint32_t SteinerSolver::dreyfus_wagner(std::span<const Vertex> terminals) {
  const std::size_t s = terminals.size();
  if (s > 20) throw PreconditionError("too many terminals for exact Steiner tree: " + std::to_string(s));
  const std::size_t n = order_;
  const std::size_t masks = std::size_t{1} << s;
  table_.assign(masks * n, kInf);
  merged_.resize(n);

  for (std::size_t i = 0; i < s; ++i) {
    std::copy_n(&dist_[terminals[i] * n], n, &table_[(std::size_t{1} << i) * n]);
  }
  for (std::size_t mask = 1; mask < masks; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    const std::size_t low = mask & (~mask + 1);
    for (std::size_t v = 0; v < n; ++v) {
      std::uint32_t best = kInf;
      for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
        if ((sub & low) == 0) continue;
        best = std::min(best, table_[sub * n + v] + table_[(mask ^ sub) * n + v]);
      }
      merged_[v] = best;
    }
    std::uint32_t* row = &table_[mask * n];
    for (std::size_t v = 0; v < n; ++v) {
      std::uint32_t best = kInf;
      const std::uint32_t* dv = &dist_[v * n];
      for (std::size_t u = 0; u < n; ++u) best = std::min(best, merged_[u] + dv[u]);
      row[v] = best;
    }
  }
  return table_[(masks - 1) * n + terminals[0]];
}

TreeSteiner::TreeSteiner(const Graph& t) : order_(t.order()) {
  if (!is_tree(t)) throw PreconditionError("graph is not a tree");
  dist_ = flat_distances(t);
  preorder_.assign(order_, 0);
  std::vector<Vertex> stack{0};
  std::vector<bool> seen(order_, false);
  seen[0] = true;
  std::uint32_t next = 0;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    preorder_[x] = next++;
    const auto nbrs = t.neighbors(x);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      if (!seen[*it]) {
        seen[*it] = true;
        stack.push_back(*it);
      }
    }
  }
}

std::uint32_t TreeSteiner::distance(std::span<const Vertex> terminals) const {
  if (terminals.empty()) throw PreconditionError("terminal set is empty");
  std::vector<Vertex> ordered(terminals.begin(), terminals.end());
  for (Vertex v : ordered) {
    if (v >= order_) throw PreconditionError("terminal " + std::to_string(v) + " out of range");
  }
  std::sort(ordered.begin(), ordered.end(), [&](Vertex a, Vertex b) { return preorder_[a] < preorder_[b]; });
  std::uint64_t walk = 0;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Vertex a = ordered[i];
    const Vertex b = ordered[(i + 1) % ordered.size()];
    walk += dist_[a * order_ + b];
  }
  return static_cast<std::uint32_t>(walk / 2);
}

std::uint32_t steiner_distance(const Graph& g, const TerminalSet& s) {
  SteinerSolver solver(g);
  return solver.distance(s.vertices());
}

std::uint32_t steiner_distance_tree(const Graph& t, const TerminalSet& s) { return TreeSteiner(t).distance(s.vertices()); }

BigInt sw_k(const Graph& g, unsigned k) {
  require_k(k, g.order(), "sw_k requires 1 <= k <= n");
  SteinerSolver solver(g);
  std::vector<Vertex> subset(k);
  std::uint64_t total = 0;
  for_each_combination(g.order(), k, [&](std::span<const std::uint32_t> idx) {
    std::copy(idx.begin(), idx.end(), subset.begin());
    total = checked_add(total, solver.distance(subset));
  });
  return total;
}

Rational mu_k(const Graph& g, unsigned k) { return Rational(sw_k(g, k), binomial(g.order(), k)); }

BigInt sw_k_tree(const Graph& t, unsigned k) { return sw_k_weighted_tree(t, WeightFn::uniform(t.order(), 1), k); }

BigInt sw_k_weighted_naive(const Graph& g, const WeightFn& c, unsigned k) {
  require_weights(g, c);
  require_k(k, c.total(), "weighted index requires 1 <= k <= N");
  SteinerSolver solver(g);

  std::vector<Vertex> copies;  // copy index -> original, grouped by original
  copies.reserve(c.total());
  for (Vertex v = 0; v < g.order(); ++v) copies.insert(copies.end(), c[v], v);

  std::vector<Vertex> originals;
  std::uint64_t total = 0;
  for_each_combination(copies.size(), k, [&](std::span<const std::uint32_t> idx) {
    originals.clear();
    for (std::uint32_t i : idx) {
      if (originals.empty() || originals.back() != copies[i]) originals.push_back(copies[i]);
    }
    total = checked_add(total, solver.distance(originals));
  });
  return total;
}

BigInt sw_k_weighted(const Graph& g, const WeightFn& c, unsigned k) {
  require_weights(g, c);
  require_k(k, c.total(), "weighted index requires 1 <= k <= N");
  SteinerSolver solver(g);
  const std::vector<Vertex> support = c.support();
  const BinomialColumn choose_k(c.total(), k);

  BigInt total = 0;
  std::vector<Vertex> originals;
  const std::size_t largest = std::min<std::size_t>(k, support.size());
  for (std::size_t size = 2; size <= largest; ++size) {
    for_each_combination(support.size(), size, [&](std::span<const std::uint32_t> idx) {
      originals.clear();
      for (std::uint32_t i : idx) originals.push_back(support[i]);
      const std::uint32_t d = solver.distance(originals);
      if (d == 0) return;
      // Inclusion-exclusion over sub-originals T: k-subsets of copies of T
      // minus those missing some member of S*.
      BigInt multiplicity = 0;
      const std::size_t subsets = std::size_t{1} << size;
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        std::uint64_t weight = 0;
        for (std::size_t b = 0; b < size; ++b) {
          if (mask >> b & 1) weight += c[originals[b]];
        }
        const bool negative = (size - static_cast<std::size_t>(__builtin_popcountll(mask))) % 2 == 1;
        if (negative) {
          multiplicity -= choose_k(weight);
        } else {
          multiplicity += choose_k(weight);
        }
      }
      total += multiplicity * d;
    });
  }
  return total;
}

BigInt sw_k_weighted_tree(const Graph& t, const WeightFn& c, unsigned k) {
  require_weights(t, c);
  if (!is_tree(t)) throw PreconditionError("graph is not a tree");
  require_k(k, c.total(), "weighted index requires 1 <= k <= N");

  const std::size_t n = t.order();
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : t.neighbors(order[i])) {
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = order[i];
        order.push_back(y);
      }
    }
  }
  std::vector<std::uint64_t> below(c.values().begin(), c.values().end());
  for (std::size_t i = order.size(); i-- > 1;) below[parent[order[i]]] += below[order[i]];

  const std::uint64_t total_weight = c.total();
  const BigInt all = binomial(total_weight, k);
  BigInt sum = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::uint64_t side = below[order[i]];
    sum += all - binomial(side, k) - binomial(total_weight - side, k);
  }
  return sum;
}

Rational mu_k_weighted(const Graph& g, const WeightFn& c, unsigned k) {
  const BigInt sw = sw_k_weighted(g, c, k);
  return Rational(sw, binomial(c.total(), k));
}

}  // namespace steiner

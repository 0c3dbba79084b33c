#pragma once

#include "steiner/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace steiner {

/// Non-negative integer vertex weights. A vertex of weight w stands for w
/// indistinguishable copies; weight 0 removes it from the copy set but not
/// from the graph.
class WeightFn {
 public:
  WeightFn() = default;
  explicit WeightFn(std::vector<std::uint64_t> weights);

  static WeightFn uniform(std::size_t order, std::uint64_t weight);

  std::size_t order() const noexcept { return weights_.size(); }
  std::uint64_t operator[](Vertex v) const { return weights_.at(v); }
  std::span<const std::uint64_t> values() const noexcept { return weights_; }

  /// N, the total number of copies.
  std::uint64_t total() const noexcept { return total_; }
  /// Smallest weight over all vertices (0 for an empty map).
  std::uint64_t min() const noexcept;
  std::uint64_t sum(std::span<const Vertex> vertices) const;
  /// Vertices of positive weight, ascending.
  std::vector<Vertex> support() const;

  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
};

}  // namespace steiner

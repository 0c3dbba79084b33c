#include "steiner/weights.hpp"

#include "steiner/exact.hpp"

#include <algorithm>

namespace steiner {

WeightFn::WeightFn(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
  for (std::uint64_t w : weights_) total_ = checked_add(total_, w);
}

WeightFn WeightFn::uniform(std::size_t order, std::uint64_t weight) {
  return WeightFn(std::vector<std::uint64_t>(order, weight));
}

std::uint64_t WeightFn::min() const noexcept {
  if (weights_.empty()) return 0;
  return *std::min_element(weights_.begin(), weights_.end());
}

std::uint64_t WeightFn::sum(std::span<const Vertex> vertices) const {
  std::uint64_t s = 0;
  for (Vertex v : vertices) s = checked_add(s, weights_.at(v));
  return s;
}

std::vector<Vertex> WeightFn::support() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < weights_.size(); ++v) {
    if (weights_[v] > 0) out.push_back(v);
  }
  return out;
}

}  // namespace steiner

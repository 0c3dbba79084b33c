#pragma once

// Canonical edge-list text format:
//
//   n m
//   u v        (m lines, 0 <= u < v < n)
//
// ASCII, LF line endings, no comments. Weight files hold `v w` lines; vertices
// that are not listed get weight 0.

#include "steiner/graph.hpp"
#include "steiner/weights.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace steiner {

/// Throws ParseError (with a line number) on any deviation from the format.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

std::string format_edge_list(const Graph& g);

WeightFn parse_weights(std::string_view text, std::size_t order);
WeightFn load_weights(const std::string& path, std::size_t order);

}  // namespace steiner

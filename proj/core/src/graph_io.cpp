#include "steiner/graph_io.hpp"

#include "steiner/errors.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <vector>

namespace steiner {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Exactly two non-negative decimal integers separated by one space.
std::pair<std::uint64_t, std::uint64_t> parse_pair(std::string_view line, std::size_t lineno) {
  if (line.find('\r') != std::string_view::npos) throw ParseError(lineno, "CR character (LF line endings required)");
  const std::size_t space = line.find(' ');
  if (space == std::string_view::npos) throw ParseError(lineno, "expected two integers separated by a space");
  const auto field = [&](std::string_view s) {
    std::uint64_t value = 0;
    if (s.empty()) throw ParseError(lineno, "empty field");
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError(lineno, "not a non-negative integer: '" + std::string(s) + "'");
    }
    return value;
  };
  return {field(line.substr(0, space)), field(line.substr(space + 1))};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header line 'n m'");
  const auto [n, m] = parse_pair(lines[0], 1);
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(1, "vertex count too large");
  if (lines.size() != m + 1) {
    throw ParseError(lines.size(), "header announces " + std::to_string(m) + " edges, found " +
                                       std::to_string(lines.size() - 1) + " edge lines");
  }
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = parse_pair(lines[i], i + 1);
    if (u >= n || v >= n) throw ParseError(i + 1, "vertex id out of range");
    if (u == v) throw ParseError(i + 1, "loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(i + 1, "edge endpoints must satisfy u < v");
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(i + 1, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

Graph read_edge_list(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

Graph load_edge_list(const std::string& path) { return parse_edge_list(slurp(path)); }

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

WeightFn parse_weights(std::string_view text, std::size_t order) {
  std::vector<std::uint64_t> weights(order, 0);
  std::vector<bool> seen(order, false);
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto [v, w] = parse_pair(lines[i], i + 1);
    if (v >= order) throw ParseError(i + 1, "vertex id out of range");
    if (seen[v]) throw ParseError(i + 1, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    weights[v] = w;
  }
  return WeightFn(std::move(weights));
}

WeightFn load_weights(const std::string& path, std::size_t order) { return parse_weights(slurp(path), order); }

}  // namespace steiner

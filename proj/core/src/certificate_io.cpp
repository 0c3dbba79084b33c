#include "steiner/serialization.hpp"

#include "steiner/errors.hpp"

#include <json.hpp>

namespace steiner {

namespace {

using Json = nlohmann::ordered_json;

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::uint64_t as_count(const Json& value, const char* what) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

Vertex as_vertex(const Json& value, const char* what) {
  const std::uint64_t v = as_count(value, what);
  if (v > std::numeric_limits<Vertex>::max()) throw ParseError(std::string(what) + " out of range");
  return static_cast<Vertex>(v);
}

std::vector<Vertex> vertices_from(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const Json& v : value) out.push_back(as_vertex(v, what));
  return out;
}

std::vector<Edge> edges_from(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Edge> out;
  for (const Json& pair : value) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError(std::string(what) + " entries must be [u, v] pairs");
    const Vertex a = as_vertex(pair[0], what);
    const Vertex b = as_vertex(pair[1], what);
    if (a >= b) throw ParseError(std::string(what) + " entries must satisfy u < v");
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::uint64_t> counts_from(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  for (const Json& v : value) out.push_back(as_count(v, what));
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  Json doc;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        constexpr bool packing = std::is_same_v<T, PackingCertificate>;
        doc["method"] = packing ? "packing" : "matching";
        doc["order"] = c.order;
        doc["tree_edges"] = edges_json(c.tree_edges);
        if constexpr (packing) {
          doc["anchors"] = c.anchors;
        } else {
          doc["anchors"] = edges_json(c.matching);
        }
        doc["connectors"] = edges_json(c.connectors);
        doc["weights"] = c.weights;
        doc["assignment"] = c.assignment;
      },
      cert);
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  const Json doc = parse(text);
  const Json& method = field(doc, "method");
  if (!method.is_string()) throw ParseError("'method' must be a string");
  const std::size_t order = as_count(field(doc, "order"), "order");
  const auto fill = [&](auto& c) {
    c.order = order;
    c.tree_edges = edges_from(field(doc, "tree_edges"), "tree_edges");
    c.connectors = edges_from(field(doc, "connectors"), "connectors");
    c.weights = counts_from(field(doc, "weights"), "weights");
    c.assignment = vertices_from(field(doc, "assignment"), "assignment");
  };
  if (method == "packing") {
    PackingCertificate c;
    fill(c);
    c.anchors = vertices_from(field(doc, "anchors"), "anchors");
    return c;
  }
  if (method == "matching") {
    MatchingCertificate c;
    fill(c);
    c.matching = edges_from(field(doc, "anchors"), "anchors");
    return c;
  }
  throw ParseError("unknown certificate method '" + method.get<std::string>() + "'");
}

std::string trace_to_json(std::span<const IroningMove> trace) {
  Json doc = Json::array();
  for (const IroningMove& move : trace) {
    Json entry;
    entry["u"] = move.u;
    entry["w"] = move.w;
    entry["A"] = move.branch;
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::vector<IroningMove> trace_from_json(std::string_view text) {
  const Json doc = parse(text);
  if (!doc.is_array()) throw ParseError("trace must be a JSON array");
  std::vector<IroningMove> out;
  for (const Json& entry : doc) {
    IroningMove move;
    move.u = as_vertex(field(entry, "u"), "u");
    move.w = as_vertex(field(entry, "w"), "w");
    move.branch = vertices_from(field(entry, "A"), "A");
    out.push_back(std::move(move));
  }
  return out;
}

}  // namespace steiner

#pragma once

// JSON forms for audit trails.
//
// Certificate:
//   {"method": "packing" | "matching", "order": n,
//    "tree_edges": [[u,v],...], "anchors": [a,...] or [[u,v],...],
//    "connectors": [[u,v],...], "weights": [c(0),...,c(n-1)],
//    "assignment": [a_0,...,a_{n-1}]}
//
// Ironing trace:
//   [{"u": u, "w": w, "A": [a,...]}, ...]
//
// Serialisation is deterministic: parse followed by serialise reproduces the
// input bytes of anything this module wrote.

#include "steiner/constructors.hpp"
#include "steiner/tree_transforms.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steiner {

std::string certificate_to_json(const Certificate& cert);
/// Throws ParseError on malformed JSON or a schema mismatch.
Certificate certificate_from_json(std::string_view text);

std::string trace_to_json(std::span<const IroningMove> trace);
std::vector<IroningMove> trace_from_json(std::string_view text);

}  // namespace steiner

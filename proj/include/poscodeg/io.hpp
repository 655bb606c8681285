#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "poscodeg/hypergraph.hpp"

namespace poscodeg {

/// Plain-text graph format "HG v1":
///
///   n m r
///   v1 v2 ... vr     (m lines, 0-based vertex indices)
///
/// Output is bit-exact reproducible: edges are written sorted
/// lexicographically (the normalized order make_hypergraph produces), one
/// per line, single spaces, trailing newline.
Hypergraph read_hg(std::istream& in);
void write_hg(std::ostream& out, const Hypergraph& h);

/// JSON mirror of the same data: {"n":..., "r":..., "edges":[[...],...]},
/// edges in the same sorted order.
Hypergraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Hypergraph& h);

/// Reads a graph from a file; a ".json" suffix selects the JSON mirror,
/// anything else is parsed as HG v1.
Hypergraph load_graph_file(const std::string& path);

/// Serialize to a string in HG v1 (for tests and tools).
std::string to_hg_string(const Hypergraph& h);

}  // namespace poscodeg

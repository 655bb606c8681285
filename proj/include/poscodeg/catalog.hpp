#pragma once

#include <string>
#include <vector>

#include "poscodeg/hypergraph.hpp"

namespace poscodeg {

/// A named 3-graph from the built-in catalog of forbidden graphs and
/// reference designs, with a short human description of where its edge list
/// comes from (the classical 1-based notation is quoted there so the stored
/// 0-based list can be checked by eye).
struct NamedGraph {
    std::string name;
    Hypergraph graph;
    std::string source;
};

/// All catalog entries, in a fixed presentation order.
const std::vector<NamedGraph>& catalog_entries();

/// Lookup by name; throws on an unknown name, listing the valid ones.
const Hypergraph& catalog_get(const std::string& name);

/// True iff the name is in the catalog.
bool catalog_has(const std::string& name);

/// The "book with spine" graph J_k: one distinguished vertex (index 0)
/// contained in every edge, and every pair of the other k vertices completing
/// an edge with it: k+1 vertices, C(k,2) edges {0,i,j}.  Requires k >= 2.
Hypergraph j_k(int k);

/// Complete multipartite 3-graph: classes of the given sizes occupy
/// consecutive vertex ranges, and every triple meeting three distinct classes
/// is an edge.  Requires at least 3 classes, all nonempty.
Hypergraph complete_multipartite(const std::vector<int>& sizes);

}  // namespace poscodeg

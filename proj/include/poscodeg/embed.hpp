#pragma once

#include <array>
#include <optional>

#include "poscodeg/hypergraph.hpp"

namespace poscodeg {

/// An injective vertex map V(F) -> V(H) sending every edge of F to an edge
/// of H (plain subgraph containment, not induced).
struct Embedding {
    std::vector<int> map;  // map[f_vertex] = h_vertex
};

/// First embedding of F into H found by backtracking, or nullopt if H is
/// F-free.  F must be a nonempty 3-graph, H a 3-graph.
///
/// Vertices of F are placed in a fixed static order (descending F-degree,
/// ties by index) with forward checking: the moment two vertices of an
/// F-edge are placed, the candidate set of the third is intersected with the
/// common neighborhood of their images.  The static order makes the result a
/// pure function of the inputs.
std::optional<Embedding> contains_copy(const Hypergraph& f,
                                       const Hypergraph& h);

/// Number of unlabeled copies of F in H: edge-preserving injections divided
/// by |Aut(F)|.  Subgraph copies, not induced — a K4 holds 4 copies of K4
/// minus an edge.  Caps: |V(F)| <= 7, |V(H)| <= 64 (counting runs on single
/// machine words).
long long count_copies(const Hypergraph& f, const Hypergraph& h);

/// |Aut(F)| by permutation backtracking (images restricted to vertices of
/// equal degree, edges checked incrementally).  Cap: |V(F)| <= 12.
long long automorphism_count(const Hypergraph& f);

/// Whether every 4 vertices of H span exactly 0 or 2 edges, and the first
/// (lexicographically) violating 4-set if not.
struct SpanProfileReport {
    bool ok = true;
    std::optional<std::array<int, 4>> violation;
};
SpanProfileReport span_profile_ok(const Hypergraph& h);

/// For an edge e = {a,b,c} of H, the quantity
///   |N(ab) ∩ N(bc)| + |N(ab) ∩ N(ac)| + |N(bc) ∩ N(ac)|,
/// i.e. three times over, the vertices completing e to a K4 minus an edge.
/// Summed over all edges this counts every such copy exactly 3 times.
int per_edge_k4minus_count(const Hypergraph& h, const std::vector<int>& e);

}  // namespace poscodeg

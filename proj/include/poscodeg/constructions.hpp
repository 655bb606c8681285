#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poscodeg/hypergraph.hpp"

namespace poscodeg {

/// Blow-up: vertex i of h is replaced by a class of sizes[i] fresh vertices
/// (consecutive ranges, in vertex order; size 0 deletes the vertex), and the
/// edges are all transversal r-tuples of the edges of h.  Under a uniform
/// blow-up by m the minimum positive co-degree scales exactly by m, and if
/// every (r-1)-set of F lies in an edge of F, blow-ups of F-free graphs stay
/// F-free.
Hypergraph blow_up(const Hypergraph& h, const std::vector<int>& sizes);

/// Complete k-partite 3-graph on n vertices with class sizes as equal as
/// possible (the first n mod k classes get the extra vertex).  Its minimum
/// positive co-degree is n minus the two largest class sizes.
Hypergraph balanced_complete_k_partite(int n, int k);

/// Points on a circle, edges on the triples whose triangle contains the
/// center: a triple qualifies iff all three of its circular gaps are shorter
/// than a half turn.
///
/// Angles are exact integers on a micro-degree grid (1e-6 degrees), reduced
/// mod 360 degrees; coinciding or antipodal points are rejected by input
/// position.  Working on the integer grid keeps the membership test purely
/// combinatorial — no floating-point orientation tests anywhere.
Hypergraph circle_construction(const std::vector<std::int64_t>& microdeg);

/// Parses a decimal-degree string ("72", "12.5", "-0.000001") to exact
/// micro-degrees; rejects more than 6 fractional digits.
std::int64_t parse_angle_microdeg(const std::string& text);

/// Complete one-way bipartite 3-graph: classes X (size x_size >= 2, vertices
/// first) and Y (size y_size >= 1); edges are all {x1,x2,y}.  Y is strongly
/// independent, d(x1,x2) = y_size, d(x,y) = x_size - 1, so the minimum
/// positive co-degree is min(y_size, x_size - 1).
Hypergraph one_way_bipartite_complete(int x_size, int y_size);

/// Tripartite 3-graph X ∪ Y ∪ Z built from the point/line incidence of the
/// projective plane of order q (q prime): Y holds the q^2+q+1 points, Z the
/// q^2+q+1 lines, and {x, y, z} is an edge for every x in X and every
/// incident point/line pair (y,z).  Because two points lie on exactly one
/// common line, the Y-Z incidence graph has no 4-cycle, which makes the
/// result free of the complete tripartite graph with classes of size 2.
/// Minimum positive co-degree: min(x_size, q+1).
Hypergraph k222_tripartite(int q, int x_size);

}  // namespace poscodeg

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "poscodeg/bitset.hpp"

namespace poscodeg {

/// Thrown when an operation is asked to run above its declared size cap.
/// Distinct from std::invalid_argument (malformed input) so callers can map
/// the two to different outcomes: a cap is "this could be computed but this
/// implementation declines", never "your data is wrong".
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An immutable r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored sorted (each edge internally ascending, the edge list
/// lexicographic), so equal graphs have equal representations.  For r = 3 a
/// neighborhood cache is built at construction: for every unordered pair
/// {u,v} that lies in at least one edge, pair_nbhd holds the set
/// N(u,v) = { w : {u,v,w} is an edge }.  Pairs in no edge are absent from the
/// map and read as the empty set.
///
/// Construct through make_hypergraph; treat instances as immutable
/// afterwards.  They are then safe to share freely across threads.
struct Hypergraph {
    int n = 0;
    int r = 3;
    std::vector<std::vector<int>> edges;

    /// r == 3 only; key = min(u,v) * n + max(u,v).
    std::unordered_map<std::uint32_t, Bitset> pair_nbhd;

    size_t edge_count() const { return edges.size(); }

    /// True iff e (sorted, size r) is an edge; binary search on the list.
    bool has_edge(const std::vector<int>& e) const;

    /// N(u,v) for r = 3.  Returns a reference to the cached set, or to a
    /// shared empty set when the pair lies in no edge.
    const Bitset& neighborhood(int u, int v) const;

private:
    friend Hypergraph make_hypergraph(int n, int r,
                                      std::vector<std::vector<int>> edges);
    Bitset empty_nbhd_;
};

/// Validates, normalizes (sorts, deduplicates) and caches.  Rejects an edge
/// with a repeated vertex, a vertex outside 0..n-1, or the wrong arity,
/// naming the offending edge's position in the input list.
Hypergraph make_hypergraph(int n, int r, std::vector<std::vector<int>> edges);

/// Convenience for the common r = 3 case.
Hypergraph make_3graph(int n, std::vector<std::vector<int>> edges);

/// Number of edges containing the (r-1)-set s.
int codegree(const Hypergraph& h, const std::vector<int>& s);

/// Minimum co-degree over (r-1)-sets that lie in at least one edge.
/// Isolated vertices play no role.  Undefined (throws) when the graph has no
/// edges: with nothing positive to minimize over there is no sensible value,
/// and quietly returning 0 would corrupt every downstream bound.
int min_positive_codegree(const Hypergraph& h);

/// Minimum co-degree over ALL (r-1)-sets of vertices, zeros included.
/// Requires n >= r-1 so that at least one such set exists.
int min_codegree(const Hypergraph& h);

/// Free-function form of Hypergraph::neighborhood.
const Bitset& neighborhood(const Hypergraph& h, int u, int v);

/// All (r-1)-sets with positive co-degree, with their counts.
struct PairSet {
    struct Entry {
        std::vector<int> pair;  // ascending, size r-1
        int codegree = 0;
    };
    std::vector<Entry> pairs;  // sorted lexicographically by pair
};

/// r == 3 only.  Every 2-subset of every edge appears exactly once.
PairSet positive_pairs(const Hypergraph& h);

/// True iff no edge lies entirely inside s.
bool is_independent(const Hypergraph& h, const std::vector<int>& s);

/// True iff no edge meets s in r-1 or more vertices; equivalently every
/// (r-1)-subset of s has co-degree 0.  Strictly stronger than independence.
bool is_strongly_independent(const Hypergraph& h, const std::vector<int>& s);

/// Disjoint vertex classes covering 0..n-1.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> classes;  // each ascending
};

/// Validates disjointness and cover; empty classes are rejected unless
/// allow_empty is set.
Partition make_partition(int n, std::vector<std::vector<int>> classes,
                         bool allow_empty = false);

enum class PartitionMode {
    kPartite,         // every edge meets each class at most once
    OneWayBipartite,  // exactly 2 classes (X, Y ordered); every edge has
                      // two vertices in X and one in Y; r == 3 only
};

bool check_partition(const Hypergraph& h, const Partition& p,
                     PartitionMode mode);

/// Searches for a partition of V(h) into at most k classes such that every
/// edge is rainbow (meets each class <= once).  Exhaustive over class
/// assignments with color-symmetry pruning (vertex i may only open class
/// number <= 1 + highest class already in use).  Returns the nonempty
/// classes of some witness, or nullopt.  Declared scope n <= 12.
std::optional<Partition> find_k_partition(const Hypergraph& h, int k);

}  // namespace poscodeg

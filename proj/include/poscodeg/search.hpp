#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "poscodeg/hypergraph.hpp"

namespace poscodeg {

/// Colex rank of the triple a < b < c among all 3-subsets of the naturals:
/// C(c,3) + C(b,2) + a.  Rank 0 is {0,1,2}; the rank does not depend on the
/// ambient vertex count.
int triple_rank(int a, int b, int c);
std::array<int, 3> triple_unrank(int rank);

/// Isomorphism-invariant signature of a labeled 3-graph: the
/// lexicographically least ascending sequence of colex edge ranks over all
/// vertex relabelings, together with the vertex count.  Two graphs on the
/// same number of vertices are isomorphic iff their forms are equal.
struct CanonicalForm {
    int n = 0;
    std::vector<int> edge_ranks;
    friend auto operator<=>(const CanonicalForm&,
                            const CanonicalForm&) = default;
};

/// Computes the canonical form by pruned search over relabelings (branches
/// are cut as soon as their partially determined rank sequence exceeds the
/// best known one; candidate vertices are tried in degree order so a good
/// incumbent appears early).  Cap: n <= 10.
CanonicalForm canonical_form(const Hypergraph& h);

/// Rebuilds the labeled representative a canonical form describes.
Hypergraph canonical_to_graph(const CanonicalForm& c);

/// The lex-min relabeled rank sequence of the 3-graph with the given edge
/// ranks, and the decision version "is this edge set already lex-min": the
/// building blocks of canonical_form, exposed for the orderly search.
std::vector<int> lexmin_ranks(int n, const std::vector<int>& ranks);
bool is_lexmin(int n, const std::vector<int>& ranks);

struct SearchOptions {
    /// DFS node cap per search level.  Only binding at n = 7 (for n <= 6
    /// exhaustion is cheap and always completes); when the cap is hit the
    /// level reports itself non-exhaustive.  The cap is split evenly over a
    /// fixed set of top-of-tree branches, so results never depend on thread
    /// scheduling.
    long long budget = 1'000'000'000;
    /// Worker threads for the n >= 6 searches.  Any value produces
    /// byte-identical reports; this knob is time-only.
    int jobs = 1;
};

struct ExistsReport {
    bool found = false;
    /// The least canonical witness (an F-free graph on n vertices with
    /// minimum positive co-degree >= k), when one exists.
    std::optional<Hypergraph> witness;
    bool exhaustive = true;
    long long nodes_explored = 0;
};

/// Decision search: is there an F-free 3-graph on n labeled vertices whose
/// minimum positive co-degree is at least k (k >= 1)?  Exhaustive for
/// n <= 6; branch-and-prune with canonical-form rejection and a node budget
/// at n = 7; larger n is declined.  A non-exhaustive run can still report a
/// witness, but never a certified refutation.
ExistsReport exists_with_delta(int n, const Hypergraph& f, int k,
                               const SearchOptions& opts = {});

inline constexpr int kWitnessCap = 1000;

struct SearchReport {
    int n = 0;
    std::string forbidden;
    /// Largest k with an F-free witness; 0 means only the empty graph is
    /// F-free at this n.
    int value = 0;
    /// All witness isomorphism classes at the value, ascending, truncated
    /// at kWitnessCap entries; witness_total is the untruncated count.
    std::vector<CanonicalForm> witnesses;
    long long witness_total = 0;
    bool exhaustive = true;
    long long nodes_explored = 0;
    /// Advisory timing; deliberately excluded from serialized reports so
    /// they stay byte-identical run to run.
    double wall_time_s = 0.0;
};

/// Exact maximum of the minimum positive co-degree over F-free graphs on n
/// labeled vertices, with the complete witness class list.  Works down from
/// k = n-2; each level fully explores its pruned space (no early exit), so
/// value, witnesses and node counts are all invariant under `jobs`.
SearchReport copex_exact(int n, const Hypergraph& f,
                         const std::string& f_name = "",
                         const SearchOptions& opts = {});

/// One isomorphism class of graphs in which every 4 vertices span 0 or 2
/// edges, with its classification against the two generating families.
struct FFClassInfo {
    CanonicalForm form;
    long long labeled_count = 0;
    int edge_count = 0;
    bool circle_match = false;  // arises from points on a circle
    bool blowup_match = false;  // arises as a blow-up of the 6-point design
};

struct FFReport {
    int n = 0;
    long long labeled_survivors = 0;
    std::vector<FFClassInfo> classes;  // ascending by canonical form
    int unclassified = 0;              // classes matching neither family
};

/// Enumerates every labeled 3-graph on n vertices (n <= 6) whose 4-vertex
/// spans are all 0 or 2, groups the survivors into isomorphism classes, and
/// matches each class against generated reference families: all circle
/// configurations on n of 2n evenly spread slots (one slot per antipodal
/// pair, both choices), and all blow-ups of the 6-point double design into n
/// vertices.
FFReport ff_classification_check(int n);

}  // namespace poscodeg

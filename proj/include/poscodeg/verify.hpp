#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "poscodeg/hypergraph.hpp"

namespace poscodeg {

/// Exact rational arithmetic for every reported ratio and bound; no ratio in
/// this module is ever rounded through floating point.
using Rational = boost::rational<long long>;

/// "p/q" in lowest terms, or just "p" for integers.
std::string rational_str(const Rational& r);

/// Every nonempty 3-graph satisfies |E| >= (delta/n)^3 n^3 / 6 where delta
/// is its minimum positive co-degree.  The check reports both sides exactly.
struct EdgeBoundReport {
    Rational c;    // delta / n
    long long lhs = 0;  // |E|
    Rational rhs;  // c^3 n^3 / 6 = delta^3 / 6
    bool holds = false;
};
EdgeBoundReport edge_bound_check(const Hypergraph& h);

/// An independent set of size s forces the minimum positive co-degree down
/// to at most n - s.
struct IndependentSetBoundReport {
    std::vector<int> set;
    int delta = 0;
    int bound = 0;  // n - |S|
    bool holds = false;
};
IndependentSetBoundReport independent_set_bound_check(const Hypergraph& h,
                                                      const std::vector<int>& s);

/// All maximal independent sets reachable by greedy extension: each vertex
/// seeds one set, grown by scanning the others in ascending order;
/// duplicates are merged.  Deterministic; used to drive the independent-set
/// bound over many sets without enumerating all of them.
std::vector<std::vector<int>> greedy_maximal_independent_sets(
    const Hypergraph& h);

/// When the minimum positive co-degree exceeds n/3 by epsilon*n, every edge
/// lies in at least 3*epsilon*n copies of the 4-vertex 3-edge graph, and the
/// total copy count is at least (epsilon/162) n^4.  Both bounds are exact
/// rationals: 3*epsilon*n = 3*delta - n and (epsilon/162) n^4 =
/// (3*delta - n) n^3 / 486.
struct SupersaturationReport {
    Rational epsilon;
    long long min_per_edge = 0;
    Rational per_edge_bound;
    long long total_copies = 0;
    Rational total_bound;
    bool holds = false;
};
SupersaturationReport supersaturation_check(const Hypergraph& h);

/// T = sum over positive pairs of C(d(x,y), 2), the number of ordered pairs
/// (positive pair, unordered pair of distinct edges through it); always at
/// least |E+| * C(delta, 2).
struct TStatReport {
    long long t = 0;
    long long positive_pairs = 0;
    long long lower_bound = 0;
    bool holds = false;
};
TStatReport t_statistic(const Hypergraph& h);

/// Builds the 2-graph of pairs {x, y} for which both xyz1 and xyz2 are
/// edges, and reports whether it contains no 4-cycle (no two vertices with
/// two common neighbours).
bool link_c4_free(const Hypergraph& h, int z1, int z2);

struct DichotomyEntry {
    int n = 0;
    int delta = 0;   // of the balanced complete 3-partite graph
    bool f_free = false;
    bool certified = false;  // f_free and delta == floor(n/3)
};

/// Linear-versus-sublinear dichotomy data for a forbidden graph F: if F is
/// not 3-partite the balanced complete 3-partite graph is F-free, so
/// floor(n/3) is a certified lower bound at every requested n; if F is
/// 3-partite no linear lower bound exists and only the witnessing partition
/// is reported.
struct DichotomyReport {
    bool three_partite = false;
    std::optional<Partition> partition;  // when three_partite
    std::vector<DichotomyEntry> entries;  // when not
};
DichotomyReport dichotomy_probe(const Hypergraph& f,
                                const std::vector<int>& n_list);

/// One catalog row of the ratio table: the reference density interval for F
/// and the construction that realizes the lower end.
struct TableRef {
    std::string name;
    std::string construction;
    int parts = 0;  // class count of the balanced construction; 0 = one-way bipartite
    Rational gamma_lower;
    Rational gamma_upper;
};
const std::vector<TableRef>& reference_table();

struct TableRow {
    std::string name;
    std::string construction;
    int delta = 0;
    int n = 0;
    Rational achieved;  // delta / n
    Rational gamma_lower;
    Rational gamma_upper;
};

/// Builds each reference construction at this n (n >= 6 so every row is
/// constructible) and reports the achieved ratio next to the reference
/// interval.
std::vector<TableRow> table_rows(int n);

/// table_rows rendered as a fixed-width text table.
std::string table_emit(int n);

}  // namespace poscodeg

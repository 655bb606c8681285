#include "poscodeg/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "poscodeg/bitset.hpp"
#include "poscodeg/catalog.hpp"
#include "poscodeg/constructions.hpp"
#include "poscodeg/embed.hpp"

namespace poscodeg {

namespace {

void require_3graph(const Hypergraph& h, const std::string& what) {
    if (h.r != 3) {
        throw std::invalid_argument(what + " requires a 3-uniform graph, got arity " +
                                    std::to_string(h.r));
    }
}

void require_nonempty(const Hypergraph& h, const std::string& what) {
    if (h.edges.empty()) {
        throw std::invalid_argument(what + " needs a nonempty graph");
    }
}

long long choose2ll(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

}  // namespace

std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

EdgeBoundReport edge_bound_check(const Hypergraph& h) {
    require_3graph(h, "the edge bound");
    require_nonempty(h, "the edge bound");
    const long long delta = min_positive_codegree(h);
    EdgeBoundReport report;
    report.c = Rational(delta, h.n);
    report.lhs = static_cast<long long>(h.edges.size());
    // (delta/n)^3 n^3 / 6 collapses to delta^3 / 6 exactly.
    report.rhs = Rational(delta * delta * delta, 6);
    report.holds = Rational(report.lhs) >= report.rhs;
    return report;
}

IndependentSetBoundReport independent_set_bound_check(const Hypergraph& h,
                                                      const std::vector<int>& s) {
    require_nonempty(h, "the independent set bound");
    for (int v : s) {
        if (v < 0 || v >= h.n) {
            throw std::invalid_argument("set vertex " + std::to_string(v) +
                                        " is out of range for " +
                                        std::to_string(h.n) + " vertices");
        }
    }
    if (!is_independent(h, s)) {
        throw std::invalid_argument("the given set is not independent");
    }
    IndependentSetBoundReport report;
    report.set = s;
    std::sort(report.set.begin(), report.set.end());
    report.delta = min_positive_codegree(h);
    report.bound = h.n - static_cast<int>(s.size());
    report.holds = report.delta <= report.bound;
    return report;
}

std::vector<std::vector<int>> greedy_maximal_independent_sets(
    const Hypergraph& h) {
    std::set<std::vector<int>> found;
    for (int seed = 0; seed < h.n; ++seed) {
        std::vector<int> s{seed};
        for (int u = 0; u < h.n; ++u) {
            if (u == seed) continue;
            s.push_back(u);
            if (!is_independent(h, s)) s.pop_back();
        }
        std::sort(s.begin(), s.end());
        found.insert(std::move(s));
    }
    return {found.begin(), found.end()};
}

SupersaturationReport supersaturation_check(const Hypergraph& h) {
    require_3graph(h, "the supersaturation check");
    require_nonempty(h, "the supersaturation check");
    const long long n = h.n;
    const long long delta = min_positive_codegree(h);
    if (3 * delta < n) {
        throw std::invalid_argument(
            "not applicable: minimum positive co-degree " +
            std::to_string(delta) + " is below n/3 for n = " +
            std::to_string(n));
    }
    SupersaturationReport report;
    report.epsilon = Rational(delta, n) - Rational(1, 3);
    // 3 * epsilon * n is the integer 3*delta - n.
    const long long excess = 3 * delta - n;
    report.per_edge_bound = Rational(excess);
    report.total_bound = Rational(excess * n * n * n, 486);
    report.total_copies =
        count_copies(catalog_get("K4-").graph, h);
    report.min_per_edge = -1;
    for (const auto& e : h.edges) {
        const long long c = per_edge_k4minus_count(h, e);
        if (report.min_per_edge < 0 || c < report.min_per_edge)
            report.min_per_edge = c;
    }
    report.holds = Rational(report.min_per_edge) >= report.per_edge_bound &&
                   Rational(report.total_copies) >= report.total_bound;
    return report;
}

TStatReport t_statistic(const Hypergraph& h) {
    require_3graph(h, "the T statistic");
    TStatReport report;
    int delta = -1;
    for (const auto& entry : positive_pairs(h)) {
        ++report.positive_pairs;
        report.t += choose2ll(entry.codegree);
        if (delta < 0 || entry.codegree < delta) delta = entry.codegree;
    }
    report.lower_bound =
        delta < 0 ? 0 : report.positive_pairs * choose2ll(delta);
    report.holds = report.lower_bound <= report.t;
    return report;
}

bool link_c4_free(const Hypergraph& h, int z1, int z2) {
    require_3graph(h, "the link graph check");
    for (int z : {z1, z2}) {
        if (z < 0 || z >= h.n) {
            throw std::invalid_argument("vertex " + std::to_string(z) +
                                        " is out of range for " +
                                        std::to_string(h.n) + " vertices");
        }
    }
    if (z1 == z2) {
        throw std::invalid_argument("the two link vertices must be distinct");
    }
    // Pairs {x, y} whose co-neighbourhood contains both z1 and z2.
    std::vector<Bitset> adj(h.n, Bitset(h.n));
    for (int x = 0; x < h.n; ++x) {
        if (x == z1 || x == z2) continue;
        for (int y = x + 1; y < h.n; ++y) {
            if (y == z1 || y == z2) continue;
            const Bitset& nb = neighborhood(h, x, y);
            if (nb.test(z1) && nb.test(z2)) {
                adj[x].set(y);
                adj[y].set(x);
            }
        }
    }
    // A 4-cycle exists iff some two vertices share two neighbours.
    for (int u = 0; u < h.n; ++u) {
        for (int v = u + 1; v < h.n; ++v) {
            if (adj[u].intersect_count(adj[v]) >= 2) return false;
        }
    }
    return true;
}

DichotomyReport dichotomy_probe(const Hypergraph& f,
                                const std::vector<int>& n_list) {
    require_3graph(f, "the dichotomy probe");
    DichotomyReport report;
    auto partition = find_k_partition(f, 3);
    report.three_partite = partition.has_value();
    if (report.three_partite) {
        report.partition = std::move(partition);
        return report;  // no linear lower bound is claimed
    }
    for (int n : n_list) {
        if (n < 3) {
            throw std::invalid_argument(
                "dichotomy probe sizes must be >= 3, got " + std::to_string(n));
        }
        const Hypergraph g = balanced_complete_k_partite(n, 3);
        DichotomyEntry entry;
        entry.n = n;
        entry.delta = min_positive_codegree(g);
        entry.f_free = !contains_copy(f, g).has_value();
        entry.certified = entry.f_free && entry.delta == n / 3;
        report.entries.push_back(entry);
    }
    return report;
}

const std::vector<TableRef>& reference_table() {
    static const std::vector<TableRef> refs = {
        {"K4-", "balanced 3-partite", 3, Rational(1, 3), Rational(1, 3)},
        {"F5", "balanced 3-partite", 3, Rational(1, 3), Rational(1, 3)},
        {"F32", "balanced 4-partite", 4, Rational(1, 2), Rational(1, 2)},
        {"Fano", "balanced 6-partite", 6, Rational(2, 3), Rational(2, 3)},
        {"K4", "one-way bipartite", 0, Rational(1, 2), Rational(2, 3)},
        {"F33", "balanced 5-partite", 5, Rational(3, 5), Rational(3, 4)},
        {"C5", "balanced 4-partite", 4, Rational(1, 2), Rational(2, 3)},
        {"C5-", "balanced 3-partite", 3, Rational(1, 3), Rational(1, 2)},
        {"J4", "balanced 4-partite", 4, Rational(1, 2), Rational(2, 3)},
    };
    return refs;
}

std::vector<TableRow> table_rows(int n) {
    if (n < 6) {
        throw std::invalid_argument(
            "the table needs n >= 6 so every row's construction exists, got " +
            std::to_string(n));
    }
    std::vector<TableRow> rows;
    for (const TableRef& ref : reference_table()) {
        const Hypergraph g =
            ref.parts == 0
                ? one_way_bipartite_complete((n + 1) / 2, n / 2)
                : balanced_complete_k_partite(n, ref.parts);
        TableRow row;
        row.name = ref.name;
        row.construction = ref.construction;
        row.n = n;
        row.delta = min_positive_codegree(g);
        row.achieved = Rational(row.delta, n);
        row.gamma_lower = ref.gamma_lower;
        row.gamma_upper = ref.gamma_upper;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table_emit(int n) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "F" << std::setw(22) << "construction"
        << std::setw(8) << "delta" << std::setw(10) << "achieved"
        << std::setw(8) << "lower" << "upper" << '\n';
    out << std::string(60, '-') << '\n';
    for (const TableRow& row : table_rows(n)) {
        out << std::left << std::setw(6) << row.name << std::setw(22)
            << row.construction << std::setw(8) << row.delta << std::setw(10)
            << rational_str(row.achieved) << std::setw(8)
            << rational_str(row.gamma_lower) << rational_str(row.gamma_upper)
            << '\n';
    }
    return out.str();
}

}  // namespace poscodeg

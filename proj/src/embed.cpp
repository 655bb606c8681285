#include "poscodeg/embed.hpp"

#include <algorithm>
#include <numeric>

namespace poscodeg {

namespace {

void require_3graph(const Hypergraph& g, const char* who, const char* role) {
    if (g.r != 3)
        throw std::invalid_argument(std::string(who) + ": " + role +
                                    " must be a 3-graph");
}

/// Static placement order: descending degree, ties by vertex index.
std::vector<int> placement_order(const Hypergraph& f) {
    std::vector<int> deg(static_cast<size_t>(f.n), 0);
    for (const auto& e : f.edges)
        for (int v : e) ++deg[static_cast<size_t>(v)];
    std::vector<int> order(static_cast<size_t>(f.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)];
    });
    return order;
}

/// For each placement step t, the forward-checking work triggered by placing
/// the vertex at step t: edges of F whose second vertex gets placed at step
/// t, recorded as (earlier step, affected later step).
struct ForwardRule {
    int partner_step;  // already placed
    int target_step;   // still unplaced; its candidates get intersected
};

std::vector<std::vector<ForwardRule>> forward_rules(
    const Hypergraph& f, const std::vector<int>& order) {
    std::vector<int> step_of(static_cast<size_t>(f.n));
    for (size_t t = 0; t < order.size(); ++t)
        step_of[static_cast<size_t>(order[t])] = static_cast<int>(t);
    std::vector<std::vector<ForwardRule>> rules(order.size());
    for (const auto& e : f.edges) {
        int s0 = step_of[static_cast<size_t>(e[0])];
        int s1 = step_of[static_cast<size_t>(e[1])];
        int s2 = step_of[static_cast<size_t>(e[2])];
        int lo = std::min({s0, s1, s2});
        int hi = std::max({s0, s1, s2});
        int mid = s0 + s1 + s2 - lo - hi;
        rules[static_cast<size_t>(mid)].push_back({lo, hi});
    }
    return rules;
}

}  // namespace

std::optional<Embedding> contains_copy(const Hypergraph& f,
                                       const Hypergraph& h) {
    require_3graph(f, "contains_copy", "the pattern");
    require_3graph(h, "contains_copy", "the host");
    if (f.edges.empty())
        throw std::invalid_argument(
            "contains_copy: the pattern graph must have at least one edge");
    if (f.n > h.n) return std::nullopt;

    const std::vector<int> order = placement_order(f);
    const auto rules = forward_rules(f, order);

    Bitset all(h.n);
    for (int v = 0; v < h.n; ++v) all.set(v);

    std::vector<Bitset> cand(static_cast<size_t>(f.n), all);
    std::vector<int> image(static_cast<size_t>(f.n), -1);  // by step
    std::vector<char> used(static_cast<size_t>(h.n), 0);
    // Undo log of (step, previous candidate set), unwound per level.
    std::vector<std::pair<int, Bitset>> trail;

    auto rec = [&](auto&& self, size_t t) -> bool {
        if (t == order.size()) return true;
        std::vector<int> options = cand[t].to_vector();
        for (int x : options) {
            if (used[static_cast<size_t>(x)]) continue;
            image[t] = x;
            used[static_cast<size_t>(x)] = 1;
            size_t trail_mark = trail.size();
            bool dead_end = false;
            for (const ForwardRule& rule : rules[t]) {
                const size_t tgt = static_cast<size_t>(rule.target_step);
                const Bitset& nb = h.neighborhood(
                    image[static_cast<size_t>(rule.partner_step)], x);
                trail.emplace_back(rule.target_step, cand[tgt]);
                cand[tgt] &= nb;
                if (cand[tgt].none()) {
                    dead_end = true;
                    break;
                }
            }
            if (!dead_end && self(self, t + 1)) return true;
            while (trail.size() > trail_mark) {
                cand[static_cast<size_t>(trail.back().first)] =
                    std::move(trail.back().second);
                trail.pop_back();
            }
            used[static_cast<size_t>(x)] = 0;
            image[t] = -1;
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;

    Embedding emb;
    emb.map.assign(static_cast<size_t>(f.n), -1);
    for (size_t t = 0; t < order.size(); ++t)
        emb.map[static_cast<size_t>(order[t])] = image[t];
    return emb;
}

long long count_copies(const Hypergraph& f, const Hypergraph& h) {
    require_3graph(f, "count_copies", "the pattern");
    require_3graph(h, "count_copies", "the host");
    if (f.edges.empty())
        throw std::invalid_argument(
            "count_copies: the pattern graph must have at least one edge");
    if (f.n > 7)
        throw InfeasibleError("count_copies: pattern capped at 7 vertices");
    if (h.n > 64)
        throw InfeasibleError("count_copies: host capped at 64 vertices");
    if (f.n > h.n) return 0;

    // Word-sized common neighborhoods of the host.
    std::vector<std::uint64_t> nbhd(static_cast<size_t>(h.n) *
                                        static_cast<size_t>(h.n),
                                    0);
    for (const auto& e : h.edges) {
        const int p[3][3] = {{e[0], e[1], e[2]},
                             {e[0], e[2], e[1]},
                             {e[1], e[2], e[0]}};
        for (const auto& row : p) {
            nbhd[static_cast<size_t>(row[0]) * static_cast<size_t>(h.n) +
                 static_cast<size_t>(row[1])] |= std::uint64_t{1} << row[2];
            nbhd[static_cast<size_t>(row[1]) * static_cast<size_t>(h.n) +
                 static_cast<size_t>(row[0])] |= std::uint64_t{1} << row[2];
        }
    }

    const std::vector<int> order = placement_order(f);
    const auto rules = forward_rules(f, order);
    const std::uint64_t all = h.n == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << h.n) - 1;

    std::array<std::uint64_t, 7> cand{};
    cand.fill(all);
    std::array<int, 7> image{};
    std::uint64_t used = 0;
    long long injections = 0;

    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == order.size()) {
            ++injections;
            return;
        }
        std::uint64_t options = cand[t] & ~used;
        while (options) {
            int x = std::countr_zero(options);
            options &= options - 1;
            image[t] = x;
            used |= std::uint64_t{1} << x;
            // One slot per forward rule at this step; a 7-vertex pattern has
            // at most 35 edges, so 35 bounds the rules at any single step.
            std::array<std::uint64_t, 35> saved;
            bool dead_end = false;
            for (size_t ri = 0; ri < rules[t].size(); ++ri) {
                const ForwardRule& rule = rules[t][ri];
                const size_t tgt = static_cast<size_t>(rule.target_step);
                saved[ri] = cand[tgt];
                cand[tgt] &= nbhd[static_cast<size_t>(
                                      image[static_cast<size_t>(
                                          rule.partner_step)]) *
                                      static_cast<size_t>(h.n) +
                                  static_cast<size_t>(x)];
                if (!cand[tgt]) {
                    // Roll back the rules applied so far, this one included.
                    for (size_t rj = 0; rj <= ri; ++rj)
                        cand[static_cast<size_t>(rules[t][rj].target_step)] =
                            saved[rj];
                    dead_end = true;
                    break;
                }
            }
            if (!dead_end) {
                self(self, t + 1);
                for (size_t rj = 0; rj < rules[t].size(); ++rj)
                    cand[static_cast<size_t>(rules[t][rj].target_step)] =
                        saved[rj];
            }
            used &= ~(std::uint64_t{1} << x);
        }
    };
    rec(rec, 0);

    long long aut = automorphism_count(f);
    // Every unlabeled copy is hit by exactly |Aut(F)| injections.
    return injections / aut;
}

long long automorphism_count(const Hypergraph& f) {
    if (f.n > 12)
        throw InfeasibleError("automorphism_count: capped at 12 vertices");
    std::vector<int> deg(static_cast<size_t>(std::max(f.n, 1)), 0);
    for (const auto& e : f.edges)
        for (int v : e) ++deg[static_cast<size_t>(v)];

    // Edges are verified as soon as their last vertex is mapped.
    std::vector<std::vector<const std::vector<int>*>> by_max(
        static_cast<size_t>(std::max(f.n, 1)));
    for (const auto& e : f.edges)
        by_max[static_cast<size_t>(e.back())].push_back(&e);

    std::vector<int> image(static_cast<size_t>(std::max(f.n, 1)), -1);
    std::vector<char> used(static_cast<size_t>(std::max(f.n, 1)), 0);
    long long count = 0;
    std::vector<int> mapped;

    auto rec = [&](auto&& self, int v) -> void {
        if (v == f.n) {
            ++count;
            return;
        }
        for (int x = 0; x < f.n; ++x) {
            if (used[static_cast<size_t>(x)] ||
                deg[static_cast<size_t>(x)] != deg[static_cast<size_t>(v)])
                continue;
            image[static_cast<size_t>(v)] = x;
            used[static_cast<size_t>(x)] = 1;
            bool ok = true;
            for (const auto* e : by_max[static_cast<size_t>(v)]) {
                mapped.clear();
                for (int u : *e) mapped.push_back(image[static_cast<size_t>(u)]);
                std::sort(mapped.begin(), mapped.end());
                if (!f.has_edge(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, v + 1);
            used[static_cast<size_t>(x)] = 0;
            image[static_cast<size_t>(v)] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

SpanProfileReport span_profile_ok(const Hypergraph& h) {
    require_3graph(h, "span_profile_ok", "the graph");
    SpanProfileReport report;
    std::vector<int> t(3);
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            for (int c = b + 1; c < h.n; ++c)
                for (int d = c + 1; d < h.n; ++d) {
                    int count = 0;
                    const int quad[4] = {a, b, c, d};
                    for (int skip = 0; skip < 4; ++skip) {
                        int j = 0;
                        for (int i = 0; i < 4; ++i)
                            if (i != skip) t[static_cast<size_t>(j++)] = quad[i];
                        count += h.has_edge(t);
                    }
                    if (count != 0 && count != 2) {
                        report.ok = false;
                        report.violation = {a, b, c, d};
                        return report;
                    }
                }
    return report;
}

int per_edge_k4minus_count(const Hypergraph& h, const std::vector<int>& e) {
    require_3graph(h, "per_edge_k4minus_count", "the graph");
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (!h.has_edge(sorted))
        throw std::invalid_argument(
            "per_edge_k4minus_count: the given triple is not an edge");
    const int a = sorted[0], b = sorted[1], c = sorted[2];
    const Bitset& nab = h.neighborhood(a, b);
    const Bitset& nac = h.neighborhood(a, c);
    const Bitset& nbc = h.neighborhood(b, c);
    return nab.intersect_count(nbc) + nab.intersect_count(nac) +
           nbc.intersect_count(nac);
}

}  // namespace poscodeg

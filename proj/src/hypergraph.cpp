#include "poscodeg/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace poscodeg {

namespace {

std::string edge_to_string(const std::vector<int>& e) {
    std::string s = "{";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

void check_vertex_set(const Hypergraph& h, const std::vector<int>& s,
                      const char* what) {
    for (int v : s)
        if (v < 0 || v >= h.n)
            throw std::invalid_argument(std::string(what) + ": vertex " +
                                        std::to_string(v) +
                                        " outside 0.." + std::to_string(h.n - 1));
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument(std::string(what) + ": repeated vertex in " +
                                    edge_to_string(s));
}

}  // namespace

bool Hypergraph::has_edge(const std::vector<int>& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

const Bitset& Hypergraph::neighborhood(int u, int v) const {
    if (r != 3)
        throw std::invalid_argument("neighborhood: defined for 3-graphs only");
    if (u == v)
        throw std::invalid_argument("neighborhood: the two vertices must differ");
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("neighborhood: vertex index out of range");
    std::uint32_t key =
        static_cast<std::uint32_t>(std::min(u, v)) * static_cast<std::uint32_t>(n) +
        static_cast<std::uint32_t>(std::max(u, v));
    auto it = pair_nbhd.find(key);
    return it == pair_nbhd.end() ? empty_nbhd_ : it->second;
}

Hypergraph make_hypergraph(int n, int r, std::vector<std::vector<int>> edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("make_hypergraph: n must be in 0.." +
                                    std::to_string(kMaxVertices));
    if (r < 1)
        throw std::invalid_argument("make_hypergraph: r must be positive");

    for (size_t i = 0; i < edges.size(); ++i) {
        auto& e = edges[i];
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument(
                "make_hypergraph: edge " + std::to_string(i) + " = " +
                edge_to_string(e) + " has arity " + std::to_string(e.size()) +
                ", expected " + std::to_string(r));
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("make_hypergraph: edge " +
                                        std::to_string(i) + " = " +
                                        edge_to_string(e) +
                                        " has a repeated vertex");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("make_hypergraph: edge " +
                                        std::to_string(i) + " = " +
                                        edge_to_string(e) +
                                        " has a vertex outside 0.." +
                                        std::to_string(n - 1));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Hypergraph h;
    h.n = n;
    h.r = r;
    h.edges = std::move(edges);
    h.empty_nbhd_ = Bitset(n);
    if (r == 3) {
        for (const auto& e : h.edges) {
            const int pairs[3][2] = {{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}};
            const int third[3] = {e[2], e[1], e[0]};
            for (int p = 0; p < 3; ++p) {
                std::uint32_t key =
                    static_cast<std::uint32_t>(pairs[p][0]) *
                        static_cast<std::uint32_t>(n) +
                    static_cast<std::uint32_t>(pairs[p][1]);
                auto [it, inserted] = h.pair_nbhd.try_emplace(key, Bitset(n));
                it->second.set(third[p]);
            }
        }
    }
    return h;
}

Hypergraph make_3graph(int n, std::vector<std::vector<int>> edges) {
    return make_hypergraph(n, 3, std::move(edges));
}

int codegree(const Hypergraph& h, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != h.r - 1)
        throw std::invalid_argument("codegree: set must have r-1 = " +
                                    std::to_string(h.r - 1) + " vertices");
    check_vertex_set(h, s, "codegree");
    if (h.r == 3) return h.neighborhood(s[0], s[1]).count();

    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    int count = 0;
    for (const auto& e : h.edges)
        if (std::includes(e.begin(), e.end(), sorted.begin(), sorted.end()))
            ++count;
    return count;
}

int min_positive_codegree(const Hypergraph& h) {
    if (h.edges.empty())
        throw std::invalid_argument(
            "min_positive_codegree: undefined for a graph with no edges");
    if (h.r == 3) {
        int best = -1;
        for (const auto& [key, nbhd] : h.pair_nbhd) {
            int c = nbhd.count();
            if (best < 0 || c < best) best = c;
        }
        return best;
    }
    // General r: count, for every (r-1)-subset of every edge, how many edges
    // contain it.  Each subset with positive co-degree shows up here.
    std::map<std::vector<int>, int> counts;
    std::vector<int> sub(h.r - 1);
    for (const auto& e : h.edges) {
        for (int skip = 0; skip < h.r; ++skip) {
            int j = 0;
            for (int i = 0; i < h.r; ++i)
                if (i != skip) sub[j++] = e[i];
            ++counts[sub];
        }
    }
    int best = -1;
    for (const auto& [sub_key, c] : counts)
        if (best < 0 || c < best) best = c;
    return best;
}

int min_codegree(const Hypergraph& h) {
    if (h.n < h.r - 1)
        throw std::invalid_argument("min_codegree: needs n >= r-1");
    if (h.r == 3) {
        // Any pair missing from the cache has co-degree 0.
        std::uint64_t total_pairs =
            static_cast<std::uint64_t>(h.n) * (h.n - 1) / 2;
        if (h.pair_nbhd.size() < total_pairs) return 0;
        return h.edges.empty() ? 0 : min_positive_codegree(h);
    }
    // General r: enumerate all (r-1)-subsets of V, stopping at the first one
    // with co-degree 0.
    std::vector<int> sub;
    int best = -1;
    auto rec = [&](auto&& self, int next) -> bool {  // returns "found zero"
        if (static_cast<int>(sub.size()) == h.r - 1) {
            int c = codegree(h, sub);
            if (best < 0 || c < best) best = c;
            return c == 0;
        }
        for (int v = next; v < h.n; ++v) {
            sub.push_back(v);
            bool zero = self(self, v + 1);
            sub.pop_back();
            if (zero) return true;
        }
        return false;
    };
    rec(rec, 0);
    return best;
}

const Bitset& neighborhood(const Hypergraph& h, int u, int v) {
    return h.neighborhood(u, v);
}

PairSet positive_pairs(const Hypergraph& h) {
    if (h.r != 3)
        throw std::invalid_argument("positive_pairs: defined for 3-graphs only");
    PairSet out;
    out.pairs.reserve(h.pair_nbhd.size());
    for (const auto& [key, nbhd] : h.pair_nbhd) {
        int u = static_cast<int>(key / static_cast<std::uint32_t>(h.n));
        int v = static_cast<int>(key % static_cast<std::uint32_t>(h.n));
        out.pairs.push_back({{u, v}, nbhd.count()});
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PairSet::Entry& a, const PairSet::Entry& b) {
                  return a.pair < b.pair;
              });
    return out;
}

bool is_independent(const Hypergraph& h, const std::vector<int>& s) {
    check_vertex_set(h, s, "is_independent");
    std::vector<char> in_s(static_cast<size_t>(h.n), 0);
    for (int v : s) in_s[static_cast<size_t>(v)] = 1;
    for (const auto& e : h.edges) {
        bool inside = true;
        for (int v : e)
            if (!in_s[static_cast<size_t>(v)]) {
                inside = false;
                break;
            }
        if (inside) return false;
    }
    return true;
}

bool is_strongly_independent(const Hypergraph& h, const std::vector<int>& s) {
    check_vertex_set(h, s, "is_strongly_independent");
    std::vector<char> in_s(static_cast<size_t>(h.n), 0);
    for (int v : s) in_s[static_cast<size_t>(v)] = 1;
    for (const auto& e : h.edges) {
        int overlap = 0;
        for (int v : e) overlap += in_s[static_cast<size_t>(v)];
        if (overlap >= h.r - 1) return false;
    }
    return true;
}

Partition make_partition(int n, std::vector<std::vector<int>> classes,
                         bool allow_empty) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int covered = 0;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        auto& cls = classes[ci];
        if (cls.empty() && !allow_empty)
            throw std::invalid_argument("make_partition: class " +
                                        std::to_string(ci) + " is empty");
        std::sort(cls.begin(), cls.end());
        for (int v : cls) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("make_partition: vertex " +
                                            std::to_string(v) +
                                            " outside 0.." + std::to_string(n - 1));
            if (seen[static_cast<size_t>(v)])
                throw std::invalid_argument("make_partition: vertex " +
                                            std::to_string(v) +
                                            " appears in two classes");
            seen[static_cast<size_t>(v)] = 1;
            ++covered;
        }
    }
    if (covered != n)
        throw std::invalid_argument(
            "make_partition: classes do not cover all vertices");
    Partition p;
    p.n = n;
    p.classes = std::move(classes);
    return p;
}

bool check_partition(const Hypergraph& h, const Partition& p,
                     PartitionMode mode) {
    if (p.n != h.n)
        throw std::invalid_argument(
            "check_partition: partition is over a different vertex count");
    std::vector<int> class_of(static_cast<size_t>(h.n), -1);
    for (size_t ci = 0; ci < p.classes.size(); ++ci)
        for (int v : p.classes[ci]) class_of[static_cast<size_t>(v)] = static_cast<int>(ci);

    if (mode == PartitionMode::OneWayBipartite) {
        if (h.r != 3)
            throw std::invalid_argument(
                "check_partition: one-way bipartite mode needs r = 3");
        if (p.classes.size() != 2)
            throw std::invalid_argument(
                "check_partition: one-way bipartite mode needs exactly 2 "
                "classes (X then Y)");
        for (const auto& e : h.edges) {
            int in_x = 0;
            for (int v : e) in_x += class_of[static_cast<size_t>(v)] == 0;
            if (in_x != 2) return false;
        }
        return true;
    }

    std::vector<int> hits(p.classes.size());
    for (const auto& e : h.edges) {
        std::fill(hits.begin(), hits.end(), 0);
        for (int v : e)
            if (++hits[static_cast<size_t>(class_of[static_cast<size_t>(v)])] > 1)
                return false;
    }
    return true;
}

std::optional<Partition> find_k_partition(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("find_k_partition: k must be >= 1");
    if (h.n > 12)
        throw InfeasibleError("find_k_partition: exhaustive search capped at 12 vertices");

    // Edges become checkable once their highest vertex is colored.
    std::vector<std::vector<const std::vector<int>*>> by_max(
        static_cast<size_t>(h.n));
    for (const auto& e : h.edges)
        by_max[static_cast<size_t>(e.back())].push_back(&e);

    std::vector<int> color(static_cast<size_t>(h.n), -1);
    auto rainbow_here = [&](int v) {
        for (const auto* e : by_max[static_cast<size_t>(v)]) {
            for (size_t i = 0; i < e->size(); ++i)
                for (size_t j = i + 1; j < e->size(); ++j)
                    if (color[static_cast<size_t>((*e)[i])] ==
                        color[static_cast<size_t>((*e)[j])])
                        return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == h.n) return true;
        int limit = std::min(k, used + 1);  // color symmetry: open at most one new class
        for (int c = 0; c < limit; ++c) {
            color[static_cast<size_t>(v)] = c;
            if (rainbow_here(v) &&
                self(self, v + 1, std::max(used, c + 1)))
                return true;
        }
        color[static_cast<size_t>(v)] = -1;
        return false;
    };

    if (h.n > 0 && !rec(rec, 0, 0)) return std::nullopt;

    std::vector<std::vector<int>> classes(static_cast<size_t>(std::min(k, std::max(h.n, 1))));
    for (int v = 0; v < h.n; ++v)
        classes[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const auto& c) { return c.empty(); }),
                  classes.end());
    return make_partition(h.n, std::move(classes),
                          /*allow_empty=*/h.n == 0);
}

}  // namespace poscodeg

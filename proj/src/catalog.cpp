#include "poscodeg/catalog.hpp"

#include <algorithm>

namespace poscodeg {

namespace {

// Edge lists are stored 0-based; each entry's source string quotes the
// classical 1-based triple notation the list was transcribed from.
std::vector<NamedGraph> build_catalog() {
    std::vector<NamedGraph> cat;

    cat.push_back({"K4-",
                   make_3graph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}),
                   "K4 with one edge removed; 1-based edges 123 124 134"});

    cat.push_back({"F5",
                   make_3graph(5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}),
                   "the 5-vertex graph with 1-based edges 123 124 345"});

    cat.push_back({"F32",
                   make_3graph(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}}),
                   "one triple across {1,2,3} plus all triples with two "
                   "vertices in {4,5}; 1-based edges 123 145 245 345"});

    cat.push_back({"Fano",
                   make_3graph(7, {{0, 1, 2},
                                   {2, 3, 4},
                                   {0, 4, 5},
                                   {1, 3, 5},
                                   {0, 3, 6},
                                   {1, 4, 6},
                                   {2, 5, 6}}),
                   "the projective plane of order 2 (7 points, 7 lines); "
                   "1-based edges 123 345 156 246 147 257 367"});

    cat.push_back({"K4",
                   make_3graph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}),
                   "all four triples on four vertices; 1-based edges "
                   "123 124 134 234"});

    cat.push_back({"F33",
                   make_3graph(6, {{0, 1, 2}, {0, 3, 4}, {0, 3, 5}, {0, 4, 5},
                                   {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4},
                                   {2, 3, 5}, {2, 4, 5}}),
                   "one triple across {1,2,3} plus every triple with exactly "
                   "two vertices in {4,5,6}; 1-based edges 123 145 146 156 "
                   "245 246 256 345 346 356"});

    cat.push_back({"C5",
                   make_3graph(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4},
                                   {0, 1, 4}}),
                   "tight 5-cycle: consecutive triples around a cycle; "
                   "1-based edges 123 234 345 145 125"});

    cat.push_back({"C5-",
                   make_3graph(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}}),
                   "tight 5-cycle with one edge removed; 1-based edges "
                   "123 234 345 145"});

    cat.push_back({"J4",
                   make_3graph(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3},
                                   {0, 2, 4}, {0, 3, 4}}),
                   "book graph J_4: vertex 1 in every edge, each pair of the "
                   "other four completing one; 1-based edges 123 124 125 "
                   "134 135 145"});

    cat.push_back({"H6",
                   make_3graph(6, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {2, 3, 5},
                                   {0, 4, 5}, {1, 4, 5}, {0, 2, 4}, {0, 3, 5},
                                   {1, 2, 5}, {1, 3, 4}}),
                   "the unique design on 6 points with every pair in exactly "
                   "two triples; 1-based edges 123 124 345 346 561 562 135 "
                   "146 236 245"});

    cat.push_back({"K222",
                   complete_multipartite({2, 2, 2}),
                   "complete tripartite graph with three classes of size 2 "
                   "(the octahedron's triangles through all three axes)"});

    return cat;
}

}  // namespace

const std::vector<NamedGraph>& catalog_entries() {
    static const std::vector<NamedGraph> cat = build_catalog();
    return cat;
}

const Hypergraph& catalog_get(const std::string& name) {
    for (const auto& entry : catalog_entries())
        if (entry.name == name) return entry.graph;
    std::string names;
    for (const auto& entry : catalog_entries()) {
        if (!names.empty()) names += ", ";
        names += entry.name;
    }
    throw std::invalid_argument("unknown catalog graph \"" + name +
                                "\" (known: " + names + ")");
}

bool catalog_has(const std::string& name) {
    for (const auto& entry : catalog_entries())
        if (entry.name == name) return true;
    return false;
}

Hypergraph j_k(int k) {
    if (k < 2) throw std::invalid_argument("j_k: k must be >= 2");
    std::vector<std::vector<int>> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) edges.push_back({0, i, j});
    return make_3graph(k + 1, std::move(edges));
}

Hypergraph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.size() < 3)
        throw std::invalid_argument(
            "complete_multipartite: need at least 3 classes for 3-graphs");
    for (size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] < 1)
            throw std::invalid_argument("complete_multipartite: class " +
                                        std::to_string(i) +
                                        " is empty; classes must be nonempty");
    std::vector<int> offset(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
    int n = offset.back();

    std::vector<std::vector<int>> edges;
    for (size_t a = 0; a < sizes.size(); ++a)
        for (size_t b = a + 1; b < sizes.size(); ++b)
            for (size_t c = b + 1; c < sizes.size(); ++c)
                for (int x = offset[a]; x < offset[a + 1]; ++x)
                    for (int y = offset[b]; y < offset[b + 1]; ++y)
                        for (int z = offset[c]; z < offset[c + 1]; ++z)
                            edges.push_back({x, y, z});
    return make_3graph(n, std::move(edges));
}

}  // namespace poscodeg

#include "poscodeg/io.hpp"

#include <fstream>
#include <sstream>

namespace poscodeg {

Hypergraph read_hg(std::istream& in) {
    long long n = 0, m = 0, r = 0;
    if (!(in >> n >> m >> r))
        throw std::invalid_argument("HG v1: expected header line \"n m r\"");
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("HG v1: vertex count " + std::to_string(n) +
                                    " outside 0.." + std::to_string(kMaxVertices));
    if (m < 0 || r < 1)
        throw std::invalid_argument("HG v1: bad edge count or arity in header");

    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<size_t>(r));
        for (long long j = 0; j < r; ++j)
            if (!(in >> e[static_cast<size_t>(j)]))
                throw std::invalid_argument("HG v1: edge " + std::to_string(i) +
                                            " is truncated");
        edges.push_back(std::move(e));
    }
    return make_hypergraph(static_cast<int>(n), static_cast<int>(r),
                           std::move(edges));
}

void write_hg(std::ostream& out, const Hypergraph& h) {
    out << h.n << ' ' << h.edges.size() << ' ' << h.r << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
}

Hypergraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") ||
        !j.contains("edges"))
        throw std::invalid_argument(
            "graph JSON: expected an object with \"n\", \"r\", \"edges\"");
    if (!j["n"].is_number_integer() || !j["r"].is_number_integer() ||
        !j["edges"].is_array())
        throw std::invalid_argument("graph JSON: wrong field types");
    std::vector<std::vector<int>> edges;
    for (const auto& je : j["edges"]) {
        if (!je.is_array())
            throw std::invalid_argument("graph JSON: each edge must be an array");
        edges.push_back(je.get<std::vector<int>>());
    }
    return make_hypergraph(j["n"].get<int>(), j["r"].get<int>(),
                           std::move(edges));
}

nlohmann::json graph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.n;
    j["r"] = h.r;
    j["edges"] = h.edges;
    return j;
}

Hypergraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(path + ": " + e.what());
        }
        return graph_from_json(j);
    }
    try {
        return read_hg(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string to_hg_string(const Hypergraph& h) {
    std::ostringstream os;
    write_hg(os, h);
    return os.str();
}

}  // namespace poscodeg

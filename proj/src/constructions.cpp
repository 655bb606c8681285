#include "poscodeg/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace poscodeg {

namespace {
constexpr std::int64_t kFullTurn = 360'000'000;  // micro-degrees
constexpr std::int64_t kHalfTurn = 180'000'000;
}  // namespace

Hypergraph blow_up(const Hypergraph& h, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != h.n)
        throw std::invalid_argument(
            "blow_up: need one class size per vertex of the base graph");
    for (size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] < 0)
            throw std::invalid_argument("blow_up: class size " +
                                        std::to_string(i) + " is negative");
    std::vector<int> offset(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i)
        offset[i + 1] = offset[i] + sizes[i];
    const int n = offset.back();

    std::vector<std::vector<int>> edges;
    std::vector<int> tuple(static_cast<size_t>(h.r));
    for (const auto& e : h.edges) {
        // Odometer over the classes of the edge's vertices.
        auto rec = [&](auto&& self, size_t pos) -> void {
            if (pos == e.size()) {
                edges.push_back(tuple);
                return;
            }
            int base = e[pos];
            for (int x = offset[static_cast<size_t>(base)];
                 x < offset[static_cast<size_t>(base) + 1]; ++x) {
                tuple[pos] = x;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
    return make_hypergraph(n, h.r, std::move(edges));
}

Hypergraph balanced_complete_k_partite(int n, int k) {
    if (k < 3)
        throw std::invalid_argument(
            "balanced_complete_k_partite: k must be >= 3 for 3-graphs");
    if (n < k)
        throw std::invalid_argument(
            "balanced_complete_k_partite: n must be >= k so no class is empty");
    std::vector<int> sizes(static_cast<size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) ++sizes[static_cast<size_t>(i)];
    return complete_multipartite(sizes);
}

Hypergraph circle_construction(const std::vector<std::int64_t>& microdeg) {
    const int n = static_cast<int>(microdeg.size());
    std::vector<std::int64_t> angle(microdeg.size());
    for (size_t i = 0; i < microdeg.size(); ++i) {
        std::int64_t a = microdeg[i] % kFullTurn;
        if (a < 0) a += kFullTurn;
        angle[i] = a;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (angle[static_cast<size_t>(i)] == angle[static_cast<size_t>(j)])
                throw std::invalid_argument(
                    "circle_construction: points " + std::to_string(i) +
                    " and " + std::to_string(j) + " coincide");
            std::int64_t diff =
                std::abs(angle[static_cast<size_t>(i)] -
                         angle[static_cast<size_t>(j)]);
            if (diff == kHalfTurn)
                throw std::invalid_argument(
                    "circle_construction: points " + std::to_string(i) +
                    " and " + std::to_string(j) + " are antipodal");
        }

    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::int64_t a = angle[static_cast<size_t>(i)];
                std::int64_t b = angle[static_cast<size_t>(j)];
                std::int64_t c = angle[static_cast<size_t>(k)];
                if (a > b) std::swap(a, b);
                if (b > c) std::swap(b, c);
                if (a > b) std::swap(a, b);
                const std::int64_t gaps[3] = {b - a, c - b, kFullTurn - (c - a)};
                // The triangle contains the circle's center iff no arc gap
                // reaches a half turn (ties are impossible: that would take
                // an antipodal pair).
                if (gaps[0] < kHalfTurn && gaps[1] < kHalfTurn &&
                    gaps[2] < kHalfTurn)
                    edges.push_back({i, j, k});
            }
    return make_3graph(n, std::move(edges));
}

std::int64_t parse_angle_microdeg(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("angle: empty string");
    size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    std::int64_t whole = 0;
    size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        whole = whole * 10 + (text[pos] - '0');
        if (whole > 1'000'000'000)
            throw std::invalid_argument("angle \"" + text + "\": out of range");
        ++pos;
        ++digits;
    }
    std::int64_t frac = 0;
    size_t frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (++frac_digits > 6)
                throw std::invalid_argument(
                    "angle \"" + text +
                    "\": more than 6 decimal places; the grid resolution is "
                    "1e-6 degrees");
            frac = frac * 10 + (text[pos] - '0');
            ++pos;
        }
        if (frac_digits == 0)
            throw std::invalid_argument("angle \"" + text +
                                        "\": digits required after '.'");
    }
    if (pos != text.size() || digits == 0)
        throw std::invalid_argument("angle \"" + text +
                                    "\": not a decimal number of degrees");
    while (frac_digits < 6) {
        frac *= 10;
        ++frac_digits;
    }
    std::int64_t value = whole * 1'000'000 + frac;
    return negative ? -value : value;
}

Hypergraph one_way_bipartite_complete(int x_size, int y_size) {
    if (x_size < 2 || y_size < 1)
        throw std::invalid_argument(
            "one_way_bipartite_complete: need x_size >= 2 and y_size >= 1");
    std::vector<std::vector<int>> edges;
    for (int x1 = 0; x1 < x_size; ++x1)
        for (int x2 = x1 + 1; x2 < x_size; ++x2)
            for (int y = 0; y < y_size; ++y)
                edges.push_back({x1, x2, x_size + y});
    return make_3graph(x_size + y_size, std::move(edges));
}

Hypergraph k222_tripartite(int q, int x_size) {
    if (q < 2)
        throw std::invalid_argument("k222_tripartite: q must be a prime >= 2");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            throw std::invalid_argument(
                "k222_tripartite: q = " + std::to_string(q) +
                " is not prime (prime-field planes only)");
    if (x_size < 1)
        throw std::invalid_argument("k222_tripartite: x_size must be >= 1");

    // Projective plane over the field with q elements: points and lines are
    // the nonzero coordinate triples up to scaling, normalized so the first
    // nonzero coordinate is 1; point y lies on line z iff their dot product
    // vanishes mod q.
    std::vector<std::array<int, 3>> points;
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) points.push_back({1, b, c});
    for (int c = 0; c < q; ++c) points.push_back({0, 1, c});
    points.push_back({0, 0, 1});
    const int plane = static_cast<int>(points.size());  // q^2 + q + 1

    const long long n = static_cast<long long>(x_size) + 2LL * plane;
    if (n > kMaxVertices)
        throw InfeasibleError("k222_tripartite: " + std::to_string(n) +
                              " vertices exceeds the cap of " +
                              std::to_string(kMaxVertices));

    std::vector<std::vector<int>> edges;
    for (int p = 0; p < plane; ++p)
        for (int l = 0; l < plane; ++l) {
            int dot = 0;
            for (int i = 0; i < 3; ++i)
                dot += points[static_cast<size_t>(p)][static_cast<size_t>(i)] *
                       points[static_cast<size_t>(l)][static_cast<size_t>(i)];
            if (dot % q != 0) continue;
            for (int x = 0; x < x_size; ++x)
                edges.push_back({x, x_size + p, x_size + plane + l});
        }
    return make_3graph(static_cast<int>(n), std::move(edges));
}

}  // namespace poscodeg

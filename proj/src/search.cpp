#include "poscodeg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>

#include "poscodeg/catalog.hpp"
#include "poscodeg/constructions.hpp"

namespace poscodeg {

namespace {

constexpr int kCanonMaxVertices = 10;
constexpr int kSearchMaxVertices = 7;

/// Depth at which the search tree is cut into independently explorable
/// subtrees.  A fixed constant (not a function of the thread count), so the
/// set of subtrees — and with it every reported number — is the same no
/// matter how many workers run.
constexpr int kFrontierDepth = 12;

constexpr int choose2(int x) { return x < 2 ? 0 : x * (x - 1) / 2; }
constexpr int choose3(int x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

constexpr int pair_rank(int a, int b) { return choose2(b) + a; }

void sort3(int& a, int& b, int& c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
}

}  // namespace

int triple_rank(int a, int b, int c) {
    if (!(0 <= a && a < b && b < c)) {
        throw std::invalid_argument(
            "triple_rank: vertices must satisfy 0 <= a < b < c, got (" +
            std::to_string(a) + ", " + std::to_string(b) + ", " +
            std::to_string(c) + ")");
    }
    return choose3(c) + choose2(b) + a;
}

std::array<int, 3> triple_unrank(int rank) {
    if (rank < 0) {
        throw std::invalid_argument("triple_unrank: rank must be >= 0, got " +
                                    std::to_string(rank));
    }
    int c = 2;
    while (choose3(c + 1) <= rank) ++c;
    int rem = rank - choose3(c);
    int b = 1;
    while (choose2(b + 1) <= rem) ++b;
    int a = rem - choose2(b);
    return {a, b, c};
}

namespace {

/// Engine behind lexmin_ranks / is_lexmin: depth-first search over label
/// placements.  Assigning old vertex w to new label t determines exactly the
/// edges whose vertices are all placed with largest new label t; their ranks
/// lie below C(t+1,3), so the relabeled rank sequence grows append-only and
/// ascending, and a branch can be compared against the incumbent (or, in
/// decision mode, the fixed target) entry by entry as soon as each entry is
/// determined.
///
/// Invariant that keeps the pruning sound: the incumbent is only ever
/// replaced from a descendant of every node currently on the stack, so a
/// node whose determined prefix matched the incumbent when it was entered
/// still matches after any replacement.  Leaves re-compare the full sequence
/// before replacing, which makes replacement correct even inside branches
/// that stopped comparing.
class CanonEngine {
  public:
    CanonEngine(int n, const std::vector<int>& ranks) : n_(n) {
        has_.assign(choose3(n), 0);
        deg_.assign(n, 0);
        for (int r : ranks) {
            if (r < 0 || r >= static_cast<int>(has_.size())) {
                throw std::invalid_argument(
                    "edge rank " + std::to_string(r) +
                    " is out of range for " + std::to_string(n) + " vertices");
            }
            if (has_[r]) {
                throw std::invalid_argument("duplicate edge rank " +
                                            std::to_string(r));
            }
            has_[r] = 1;
            const auto t = triple_unrank(r);
            ++deg_[t[0]];
            ++deg_[t[1]];
            ++deg_[t[2]];
        }
        m_ = static_cast<int>(ranks.size());
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        // High-degree vertices first: dense early labels give small early
        // ranks, so the first leaf is already a strong incumbent.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return deg_[a] > deg_[b]; });
        old_of_label_.assign(n, -1);
        used_.assign(n, 0);
        seq_.reserve(m_);
    }

    std::vector<int> compute() {
        decision_ = false;
        have_best_ = false;
        best_.clear();
        if (m_ == 0) return {};
        place(0, true);
        return best_;
    }

    /// True iff no relabeling yields a strictly smaller sequence than
    /// `target` (which must be the graph's own sorted rank sequence).
    bool decide(std::vector<int> target) {
        decision_ = true;
        best_ = std::move(target);
        have_best_ = true;
        found_smaller_ = false;
        if (m_ == 0) return true;
        place(0, true);
        return !found_smaller_;
    }

  private:
    void place(int t, bool tight) {
        if (decision_ && found_smaller_) return;
        if (t == n_) {
            if (!decision_) {
                if (!have_best_ || seq_ < best_) {
                    best_ = seq_;
                    have_best_ = true;
                }
            }
            // In decision mode a leaf reached with tight == true reproduces
            // the target exactly; strictly smaller sequences were already
            // flagged at the entry where they diverged.
            return;
        }
        for (int w : order_) {
            if (used_[w]) continue;
            used_[w] = 1;
            old_of_label_[t] = w;
            bool ok = true;
            bool child_tight = tight;
            int appended = 0;
            for (int j = 1; j < t && ok; ++j) {
                for (int i = 0; i < j; ++i) {
                    int x = old_of_label_[i], y = old_of_label_[j], z = w;
                    sort3(x, y, z);
                    if (!has_[choose3(z) + choose2(y) + x]) continue;
                    const int rank = choose3(t) + choose2(j) + i;
                    if (child_tight && have_best_) {
                        const int ref = best_[seq_.size()];
                        if (rank > ref) {
                            ok = false;
                            break;
                        }
                        if (rank < ref) {
                            child_tight = false;
                            if (decision_) found_smaller_ = true;
                        }
                    }
                    seq_.push_back(rank);
                    ++appended;
                }
            }
            if (ok && !(decision_ && found_smaller_)) place(t + 1, child_tight);
            seq_.resize(seq_.size() - appended);
            old_of_label_[t] = -1;
            used_[w] = 0;
            if (decision_ && found_smaller_) return;
        }
    }

    int n_;
    int m_ = 0;
    std::vector<char> has_;
    std::vector<int> deg_;
    std::vector<int> order_;
    std::vector<int> old_of_label_;
    std::vector<char> used_;
    std::vector<int> seq_;
    std::vector<int> best_;
    bool decision_ = false;
    bool have_best_ = false;
    bool found_smaller_ = false;
};

void check_canon_n(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    if (n > kCanonMaxVertices) {
        throw InfeasibleError(
            "canonical form search supports at most " +
            std::to_string(kCanonMaxVertices) + " vertices, got " +
            std::to_string(n));
    }
}

}  // namespace

std::vector<int> lexmin_ranks(int n, const std::vector<int>& ranks) {
    check_canon_n(n);
    CanonEngine engine(n, ranks);
    return engine.compute();
}

bool is_lexmin(int n, const std::vector<int>& ranks) {
    check_canon_n(n);
    CanonEngine engine(n, ranks);
    std::vector<int> target = ranks;
    std::sort(target.begin(), target.end());
    return engine.decide(std::move(target));
}

CanonicalForm canonical_form(const Hypergraph& h) {
    if (h.r != 3) {
        throw std::invalid_argument(
            "canonical_form requires a 3-uniform graph, got arity " +
            std::to_string(h.r));
    }
    std::vector<int> ranks;
    ranks.reserve(h.edges.size());
    for (const auto& e : h.edges) ranks.push_back(triple_rank(e[0], e[1], e[2]));
    return CanonicalForm{h.n, lexmin_ranks(h.n, ranks)};
}

Hypergraph canonical_to_graph(const CanonicalForm& c) {
    std::vector<std::vector<int>> edges;
    edges.reserve(c.edge_ranks.size());
    for (int r : c.edge_ranks) {
        const auto t = triple_unrank(r);
        if (t[2] >= c.n) {
            throw std::invalid_argument(
                "edge rank " + std::to_string(r) + " needs vertex " +
                std::to_string(t[2]) + " but the form has only " +
                std::to_string(c.n) + " vertices");
        }
        edges.push_back({t[0], t[1], t[2]});
    }
    return make_3graph(c.n, edges);
}

// ---------------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------------

namespace {

/// Edge-rank masks of every injective image of `f` in n labeled vertices.
std::vector<std::uint64_t> copy_masks(int n, const Hypergraph& f) {
    std::vector<std::uint64_t> result;
    if (f.n > n) return result;
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> image(f.n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == f.n) {
            std::uint64_t mask = 0;
            for (const auto& e : f.edges) {
                int x = image[e[0]], y = image[e[1]], z = image[e[2]];
                sort3(x, y, z);
                mask |= std::uint64_t{1} << (choose3(z) + choose2(y) + x);
            }
            if (seen.insert(mask).second) result.push_back(mask);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            used[w] = 1;
            image[v] = w;
            self(self, v + 1);
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return result;
}

/// Precomputed per-(n, F, k) tables shared by every worker of one search
/// level.
struct LevelContext {
    int n = 0;
    int k = 0;
    int num_triples = 0;
    int num_pairs = 0;
    // rank -> the three pair ids of its triple
    std::array<std::array<int, 3>, 35> tri_pairs{};
    // F-copy masks whose largest rank is i, with that bit removed: adding
    // rank i completes a copy iff the rest is already present.
    std::vector<std::vector<std::uint64_t>> rest_by_max;
    bool canonical_mode = false;  // reject non-lex-min partial graphs (n = 7)
};

LevelContext make_level_context(int n, const Hypergraph& f, int k) {
    LevelContext ctx;
    ctx.n = n;
    ctx.k = k;
    ctx.num_triples = choose3(n);
    ctx.num_pairs = choose2(n);
    ctx.canonical_mode = (n == 7);
    for (int rank = 0; rank < ctx.num_triples; ++rank) {
        const auto t = triple_unrank(rank);
        ctx.tri_pairs[rank] = {pair_rank(t[0], t[1]), pair_rank(t[0], t[2]),
                               pair_rank(t[1], t[2])};
    }
    ctx.rest_by_max.assign(ctx.num_triples, {});
    for (std::uint64_t mask : copy_masks(n, f)) {
        const int top = std::bit_width(mask) - 1;
        ctx.rest_by_max[top].push_back(mask ^ (std::uint64_t{1} << top));
    }
    return ctx;
}

/// A suspended search position: the next rank to decide plus everything the
/// decision depends on.
struct DfsState {
    std::uint64_t edges = 0;
    std::array<std::uint8_t, 21> cnt{};  // chosen triples per pair
    std::array<std::uint8_t, 21> rem{};  // undecided triples per pair
    int depth = 0;
};

struct SubtreeResult {
    long long nodes = 0;
    bool incomplete = false;
    std::set<std::vector<int>> canon;  // canonical rank sequences found
};

std::vector<int> ranks_of_mask(std::uint64_t mask) {
    std::vector<int> ranks;
    ranks.reserve(static_cast<size_t>(std::popcount(mask)));
    while (mask) {
        ranks.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return ranks;
}

/// One depth-first pass over (part of) a level's tree.  Children are always
/// generated include-first and both are always visited (no early exit on
/// success), so the node count is a property of the pruned tree alone.
class Explorer {
  public:
    /// cap == 0 means unlimited.  frontier != nullptr switches the explorer
    /// into coordinator mode: instead of descending past kFrontierDepth it
    /// records the suspended state there.
    Explorer(const LevelContext& ctx, long long cap,
             std::vector<DfsState>* frontier)
        : ctx_(&ctx), cap_(cap), frontier_(frontier) {}

    /// Explores the whole level.  Only the include branch is taken at rank
    /// 0: every nonempty graph is isomorphic to one containing the rank-0
    /// triple, and the empty graph has no positive pair, so nothing with
    /// minimum positive co-degree >= 1 is missed.
    void run_root() {
        for (int p = 0; p < ctx_->num_pairs; ++p)
            rem_[p] = static_cast<std::uint8_t>(ctx_->n - 2);
        if (!spend()) return;
        // A copy mask whose largest rank is 0 is the single-edge graph
        // itself; then no nonempty graph survives.
        if (!ctx_->rest_by_max[0].empty()) return;
        const auto& pr = ctx_->tri_pairs[0];
        for (int p : pr) {
            ++cnt_[p];
            --rem_[p];
        }
        bool ok = true;
        for (int p : pr) {
            if (cnt_[p] > 0 && cnt_[p] + rem_[p] < ctx_->k) ok = false;
        }
        if (ok) {
            edges_ = 1;
            descend(1);
            edges_ = 0;
        }
        for (int p : pr) {
            --cnt_[p];
            ++rem_[p];
        }
    }

    /// Resumes a suspended state recorded by a coordinator.
    void run_from(const DfsState& s) {
        edges_ = s.edges;
        cnt_ = s.cnt;
        rem_ = s.rem;
        descend(s.depth);
    }

    SubtreeResult take() { return std::move(res_); }

  private:
    bool spend() {
        ++res_.nodes;
        if (cap_ != 0 && res_.nodes > cap_) {
            incomplete_ = true;
            res_.incomplete = true;
            return false;
        }
        return true;
    }

    void complete() {
        std::vector<int> ranks = ranks_of_mask(edges_);
        if (ctx_->canonical_mode) {
            res_.canon.insert(std::move(ranks));  // already lex-min
        } else {
            res_.canon.insert(lexmin_ranks(ctx_->n, ranks));
        }
    }

    void descend(int i) {
        if (incomplete_) return;
        if (frontier_ != nullptr && i == kFrontierDepth) {
            frontier_->push_back(DfsState{edges_, cnt_, rem_, i});
            return;
        }
        if (i == ctx_->num_triples) {
            complete();
            return;
        }
        const auto& pr = ctx_->tri_pairs[i];
        const std::uint64_t bit = std::uint64_t{1} << i;

        // Include the triple.
        if (spend()) {
            bool ok = true;
            for (std::uint64_t rest : ctx_->rest_by_max[i]) {
                if ((edges_ & rest) == rest) {
                    ok = false;  // would complete a copy of F
                    break;
                }
            }
            if (ok) {
                for (int p : pr) {
                    ++cnt_[p];
                    --rem_[p];
                }
                for (int p : pr) {
                    if (cnt_[p] > 0 && cnt_[p] + rem_[p] < ctx_->k) {
                        ok = false;
                        break;
                    }
                }
                if (ok && ctx_->canonical_mode &&
                    !is_lexmin(ctx_->n, ranks_of_mask(edges_ | bit))) {
                    ok = false;
                }
                if (ok) {
                    edges_ |= bit;
                    descend(i + 1);
                    edges_ &= ~bit;
                }
                for (int p : pr) {
                    --cnt_[p];
                    ++rem_[p];
                }
            }
        }
        if (incomplete_) return;

        // Exclude the triple.
        if (spend()) {
            bool ok = true;
            for (int p : pr) --rem_[p];
            for (int p : pr) {
                if (cnt_[p] > 0 && cnt_[p] + rem_[p] < ctx_->k) {
                    ok = false;
                    break;
                }
            }
            if (ok) descend(i + 1);
            for (int p : pr) ++rem_[p];
        }
    }

    const LevelContext* ctx_;
    long long cap_;
    std::vector<DfsState>* frontier_;
    std::uint64_t edges_ = 0;
    std::array<std::uint8_t, 21> cnt_{};
    std::array<std::uint8_t, 21> rem_{};
    bool incomplete_ = false;
    SubtreeResult res_;
};

/// Exhausts one (n, F, k) level for n in {6, 7}: a coordinator explores the
/// tree down to the frontier depth, then workers exhaust the recorded
/// subtrees.  Workers only race for the next frontier index; every reported
/// quantity is a sum or set union over the fixed subtree list, so the report
/// is identical for any job count.
SubtreeResult run_level_dfs(const LevelContext& ctx, const SearchOptions& opts) {
    const long long cap = (ctx.n == 7) ? opts.budget : 0;

    std::vector<DfsState> frontier;
    Explorer coordinator(ctx, cap, &frontier);
    coordinator.run_root();
    SubtreeResult total = coordinator.take();
    if (total.incomplete) return total;

    long long per_cap = 0;
    if (cap != 0 && !frontier.empty()) {
        per_cap = (cap - total.nodes) / static_cast<long long>(frontier.size());
        if (per_cap <= 0) {
            // The coordinator used essentially the whole budget; the
            // suspended subtrees stay unexplored.
            total.incomplete = true;
            return total;
        }
    }

    std::vector<SubtreeResult> results(frontier.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= frontier.size()) break;
            Explorer worker(ctx, per_cap, nullptr);
            worker.run_from(frontier[idx]);
            results[idx] = worker.take();
        }
    };
    const int threads = static_cast<int>(std::min<size_t>(
        static_cast<size_t>(opts.jobs), frontier.size()));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& r : results) {
        total.nodes += r.nodes;
        total.incomplete = total.incomplete || r.incomplete;
        total.canon.insert(r.canon.begin(), r.canon.end());
    }
    return total;
}

/// Exhausts one (n, F, k) level for n <= 5 by scanning all 2^C(n,3) edge
/// sets directly; the node count is exactly that power of two.
SubtreeResult run_level_direct(int n, const Hypergraph& f, int k) {
    const int m = choose3(n);
    std::vector<std::uint64_t> masks = copy_masks(n, f);
    std::vector<std::uint64_t> pair_triples(choose2(n), 0);
    for (int rank = 0; rank < m; ++rank) {
        const auto t = triple_unrank(rank);
        pair_triples[pair_rank(t[0], t[1])] |= std::uint64_t{1} << rank;
        pair_triples[pair_rank(t[0], t[2])] |= std::uint64_t{1} << rank;
        pair_triples[pair_rank(t[1], t[2])] |= std::uint64_t{1} << rank;
    }
    SubtreeResult res;
    const std::uint64_t end = std::uint64_t{1} << m;
    for (std::uint64_t g = 0; g < end; ++g) {
        ++res.nodes;
        if (g == 0) continue;  // no positive pair
        bool ok = true;
        for (std::uint64_t mask : masks) {
            if ((g & mask) == mask) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (const std::uint64_t pt : pair_triples) {
            const int c = std::popcount(g & pt);
            if (c > 0 && c < k) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        res.canon.insert(lexmin_ranks(n, ranks_of_mask(g)));
    }
    return res;
}

void check_search_args(int n, const Hypergraph& f, const SearchOptions& opts) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    if (n > kSearchMaxVertices) {
        throw InfeasibleError("exhaustive search supports at most " +
                              std::to_string(kSearchMaxVertices) +
                              " vertices, got " + std::to_string(n));
    }
    if (f.r != 3) {
        throw std::invalid_argument(
            "the forbidden graph must be 3-uniform, got arity " +
            std::to_string(f.r));
    }
    if (f.edges.empty()) {
        throw std::invalid_argument(
            "the forbidden graph must have at least one edge");
    }
    if (opts.budget < 1) {
        throw std::invalid_argument("budget must be >= 1, got " +
                                    std::to_string(opts.budget));
    }
    if (opts.jobs < 1) {
        throw std::invalid_argument("jobs must be >= 1, got " +
                                    std::to_string(opts.jobs));
    }
}

SubtreeResult run_level(int n, const Hypergraph& f, int k,
                        const SearchOptions& opts) {
    if (k > n - 2) {
        // A pair's co-degree is at most n - 2, so the level refutes itself.
        return SubtreeResult{};
    }
    if (n <= 5) return run_level_direct(n, f, k);
    const LevelContext ctx = make_level_context(n, f, k);
    return run_level_dfs(ctx, opts);
}

}  // namespace

ExistsReport exists_with_delta(int n, const Hypergraph& f, int k,
                               const SearchOptions& opts) {
    check_search_args(n, f, opts);
    if (k < 1) {
        throw std::invalid_argument("the co-degree threshold must be >= 1, got " +
                                    std::to_string(k));
    }
    SubtreeResult level = run_level(n, f, k, opts);
    ExistsReport report;
    report.found = !level.canon.empty();
    report.exhaustive = !level.incomplete;
    report.nodes_explored = level.nodes;
    if (report.found) {
        report.witness =
            canonical_to_graph(CanonicalForm{n, *level.canon.begin()});
    }
    return report;
}

SearchReport copex_exact(int n, const Hypergraph& f, const std::string& f_name,
                         const SearchOptions& opts) {
    check_search_args(n, f, opts);
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.n = n;
    report.forbidden = f_name;
    for (int k = n - 2; k >= 1; --k) {
        SubtreeResult level = run_level(n, f, k, opts);
        report.nodes_explored += level.nodes;
        if (level.incomplete) report.exhaustive = false;
        if (!level.canon.empty()) {
            report.value = k;
            report.witness_total = static_cast<long long>(level.canon.size());
            for (const auto& ranks : level.canon) {
                if (static_cast<int>(report.witnesses.size()) >= kWitnessCap)
                    break;
                report.witnesses.push_back(CanonicalForm{n, ranks});
            }
            break;
        }
    }
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

// ---------------------------------------------------------------------------
// Span-profile classification
// ---------------------------------------------------------------------------

namespace {

/// Canonical rank sequences of every circle configuration on n of 2n evenly
/// spread slots.  Slot j sits at (2j+1) * (90 degrees / n); slots j and
/// j + n are exactly antipodal, and a configuration picks one slot from each
/// antipodal pair.
std::set<std::vector<int>> circle_reference_set(int n) {
    std::set<std::vector<int>> forms;
    const long long step = 90'000'000LL / n;  // microdegrees; exact for n <= 6
    for (std::uint32_t sel = 0; sel < (std::uint32_t{1} << n); ++sel) {
        std::vector<long long> angles(n);
        for (int j = 0; j < n; ++j) {
            const int slot = j + (((sel >> j) & 1u) != 0 ? n : 0);
            angles[j] = (2LL * slot + 1) * step;
        }
        const Hypergraph g = circle_construction(angles);
        forms.insert(canonical_form(g).edge_ranks);
    }
    return forms;
}

/// Canonical rank sequences of every blow-up of the 6-point double design
/// into exactly n vertices (parts may be empty).
std::set<std::vector<int>> design_blowup_reference_set(int n) {
    std::set<std::vector<int>> forms;
    const Hypergraph& base = catalog_get("H6").graph;
    std::vector<int> sizes(6, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == 5) {
            sizes[5] = left;
            const Hypergraph g = blow_up(base, sizes);
            forms.insert(canonical_form(g).edge_ranks);
            return;
        }
        for (int s = 0; s <= left; ++s) {
            sizes[pos] = s;
            self(self, pos + 1, left - s);
        }
    };
    rec(rec, 0, n);
    return forms;
}

}  // namespace

FFReport ff_classification_check(int n) {
    if (n < 1) {
        throw std::invalid_argument("the classification needs n >= 1, got " +
                                    std::to_string(n));
    }
    if (n > 6) {
        throw InfeasibleError(
            "the span-profile classification is supported only up to 6 "
            "vertices, got " +
            std::to_string(n));
    }

    const int m = choose3(n);
    // For each 4-set of vertices, the ranks of its four triples; a surviving
    // graph must induce 0 or 2 of them on every 4-set.
    std::vector<std::array<int, 4>> quads;
    for (int d = 3; d < n; ++d) {
        for (int c = 2; c < d; ++c) {
            for (int b = 1; b < c; ++b) {
                for (int a = 0; a < b; ++a) {
                    quads.push_back({triple_rank(a, b, c), triple_rank(a, b, d),
                                     triple_rank(a, c, d),
                                     triple_rank(b, c, d)});
                }
            }
        }
    }
    std::vector<std::vector<int>> quads_of_rank(m);
    for (size_t q = 0; q < quads.size(); ++q) {
        for (int rank : quads[q])
            quads_of_rank[rank].push_back(static_cast<int>(q));
    }

    long long labeled_total = 0;
    std::map<std::vector<int>, std::pair<long long, int>> classes;
    std::vector<int> inc(quads.size(), 0), dec(quads.size(), 0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int rank) -> void {
        if (rank == m) {
            ++labeled_total;
            auto canon = lexmin_ranks(n, chosen);
            auto& entry = classes[std::move(canon)];
            ++entry.first;
            entry.second = static_cast<int>(chosen.size());
            return;
        }
        for (int take = 1; take >= 0; --take) {
            bool ok = true;
            for (int q : quads_of_rank[rank]) {
                inc[q] += take;
                ++dec[q];
                if (inc[q] > 2 || (dec[q] == 4 && inc[q] == 1)) ok = false;
            }
            if (ok) {
                if (take) chosen.push_back(rank);
                self(self, rank + 1);
                if (take) chosen.pop_back();
            }
            for (int q : quads_of_rank[rank]) {
                inc[q] -= take;
                --dec[q];
            }
        }
    };
    rec(rec, 0);

    const std::set<std::vector<int>> circle = circle_reference_set(n);
    const std::set<std::vector<int>> blowup = design_blowup_reference_set(n);

    FFReport report;
    report.n = n;
    report.labeled_survivors = labeled_total;
    for (const auto& [form, info] : classes) {
        FFClassInfo cls;
        cls.form = CanonicalForm{n, form};
        cls.labeled_count = info.first;
        cls.edge_count = info.second;
        cls.circle_match = circle.count(form) > 0;
        cls.blowup_match = blowup.count(form) > 0;
        if (!cls.circle_match && !cls.blowup_match) ++report.unclassified;
        report.classes.push_back(std::move(cls));
    }
    return report;
}

}  // namespace poscodeg

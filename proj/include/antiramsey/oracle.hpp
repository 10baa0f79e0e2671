#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string_view>
#include <thread>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "forest_spec.hpp"
#include "graph.hpp"
#include "rainbow.hpp"

namespace antiramsey {

enum class SearchStatus { Exact, LowerBoundOnly, Timeout };

inline std::string_view search_status_name(SearchStatus s) {
    switch (s) {
    case SearchStatus::Exact: return "Exact";
    case SearchStatus::LowerBoundOnly: return "LowerBoundOnly";
    case SearchStatus::Timeout: return "Timeout";
    }
    return "?";
}

/// Result of an exhaustive search.
///
/// Exact: the whole tree was explored, value is the maximum.
/// Timeout: the time budget ran out; value is what the best witness attains.
/// LowerBoundOnly: the node limit ran out; same meaning as Timeout.
struct SearchOutcome {
    std::int64_t value = 0;
    SearchStatus status = SearchStatus::Exact;
    std::int64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
    std::optional<EdgeColoring> witness;
};

struct SearchOptions {
    std::chrono::milliseconds budget{60'000};
    int threads = 1;
    std::int64_t max_nodes = 0;        // 0: unlimited
    int split_depth = -1;              // -1: automatic
    bool vertex_symmetry = true;       // sorted first row, first vertex of max color degree
};

namespace oracle_detail {

using Clock = std::chrono::steady_clock;

/// Shared between workers: incumbent and stop flags.
struct Shared {
    std::atomic<int> best{0};
    std::mutex witness_mutex;
    std::vector<Color> witness;
    std::atomic<bool> timed_out{false};
    std::atomic<bool> node_limit{false};
    std::atomic<std::int64_t> nodes{0};
    Clock::time_point deadline;
    std::int64_t max_nodes = 0;

    void offer(int value, const std::vector<Color>& colors) {
        std::lock_guard lock(witness_mutex);
        if (value > best.load()) {
            witness = colors;
            best.store(value);
        }
    }
};

/// Depth-first enumeration of restricted-growth colorings of the pairs of K_n
/// in lexicographic order. Optional constraints: no rainbow copy of a pattern,
/// per-vertex palette caps.
class Enumerator {
public:
    Enumerator(int n, std::optional<Graph> pattern, std::vector<int> caps, bool symmetry, Shared& shared)
        : n_(n), edges_(complete_edges(n)), caps_(std::move(caps)), symmetry_(symmetry), shared_(shared),
          grid_(n, static_cast<int>(edges_.size())), colors_(edges_.size(), -1),
          count_(static_cast<std::size_t>(n) * edges_.size(), 0), palette_(static_cast<std::size_t>(n), 0),
          uncolored_(static_cast<std::size_t>(n), n - 1), introduced_(edges_.size(), 0) {
        if (pattern) {
            pattern_edges_ = pattern->size();
            finder_.emplace(std::move(*pattern));
        }
        class_of_.assign(static_cast<std::size_t>(n), 0);
        if (!caps_.empty())
            for (int v = 1; v < n; ++v) class_of_[v] = caps_[v] == caps_[v - 1] ? class_of_[v - 1] : class_of_[v - 1] + 1;
    }

    int edge_total() const { return static_cast<int>(edges_.size()); }

    /// Enumerate every valid prefix of length `depth`, calling sink(prefix).
    template <typename Sink>
    void prefixes(int depth, Sink&& sink) {
        prefix_depth_ = depth;
        prefix_sink_ = [&](const std::vector<Color>& p) { sink(p); };
        dfs(0);
        flush_nodes();
        prefix_sink_ = nullptr;
        prefix_depth_ = -1;
    }

    /// Replays a prefix, then searches everything below it.
    void solve_from(const std::vector<Color>& prefix) {
        int depth = static_cast<int>(prefix.size());
        for (int i = 0; i < depth; ++i) assign(i, prefix[static_cast<std::size_t>(i)]);
        dfs(depth);
        for (int i = depth - 1; i >= 0; --i) unassign(i);
        flush_nodes();
    }

private:
    int cap(Vertex v) const { return caps_.empty() ? n_ - 1 : caps_[static_cast<std::size_t>(v)]; }
    int& cnt(Vertex v, Color c) { return count_[static_cast<std::size_t>(v) * edges_.size() + static_cast<std::size_t>(c)]; }

    bool fits_cap(Vertex v, Color c) { return cnt(v, c) > 0 || palette_[v] < cap(v); }

    void assign(int i, Color c) {
        const Edge e = edges_[static_cast<std::size_t>(i)];
        colors_[static_cast<std::size_t>(i)] = c;
        grid_.set(e.u, e.v, c);
        introduced_[static_cast<std::size_t>(i)] = c == used_;
        if (c == used_) ++used_;
        for (Vertex x : {e.u, e.v}) {
            if (cnt(x, c)++ == 0) ++palette_[x];
            --uncolored_[x];
        }
    }

    void unassign(int i) {
        const Edge e = edges_[static_cast<std::size_t>(i)];
        Color c = colors_[static_cast<std::size_t>(i)];
        for (Vertex x : {e.u, e.v}) {
            if (--cnt(x, c) == 0) --palette_[x];
            ++uncolored_[x];
        }
        colors_[static_cast<std::size_t>(i)] = -1;
        grid_.set(e.u, e.v, -1);
        if (introduced_[static_cast<std::size_t>(i)]) --used_;
    }

    // Upper bound on the final color count from this node.
    int optimistic(int next) const {
        int remaining = edge_total() - next;
        if (caps_.empty()) return used_ + remaining;
        // every new color needs fresh palette room at both ends of one uncolored pair
        int room = 0;
        for (Vertex v = 0; v < n_; ++v) room += std::min(cap(v) - palette_[v], uncolored_[v]);
        return used_ + std::min(remaining, room / 2);
    }

    // Uncolored pairs whose ends are both full must share a palette color.
    bool caps_feasible() {
        if (caps_.empty()) return true;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (colors_[i] >= 0) continue;
            const Edge e = edges_[i];
            if (palette_[e.u] < cap(e.u) || palette_[e.v] < cap(e.v)) continue;
            bool common = false;
            for (Color c = 0; c < used_ && !common; ++c) common = cnt(e.u, c) > 0 && cnt(e.v, c) > 0;
            if (!common) return false;
        }
        return true;
    }

    bool symmetry_ok(int i, Color c) const {
        if (!symmetry_) return true;
        const Edge e = edges_[static_cast<std::size_t>(i)];
        // first row sorted within interchangeable vertex classes
        if (e.u == 0 && e.v >= 2 && class_of_[e.v] == class_of_[e.v - 1] && c < colors_[static_cast<std::size_t>(i - 1)]) return false;
        return true;
    }

    // Vertex 0 has the largest color degree in its class (checked once its row is complete).
    bool degree_order_ok(int next) const {
        if (!symmetry_ || next < n_ - 1) return true;
        for (Vertex v = 1; v < n_; ++v)
            if (class_of_[v] == class_of_[0] && palette_[v] > palette_[0]) return false;
        return true;
    }

    void flush_nodes() {
        shared_.nodes.fetch_add(local_nodes_ - reported_nodes_);
        reported_nodes_ = local_nodes_;
    }

    bool stopped() const {
        return shared_.timed_out.load(std::memory_order_relaxed) || shared_.node_limit.load(std::memory_order_relaxed);
    }

    bool should_stop() {
        if (++local_nodes_ % 1024 == 0) {
            flush_nodes();
            if (Clock::now() > shared_.deadline) shared_.timed_out = true;
            if (shared_.max_nodes > 0 && shared_.nodes.load() > shared_.max_nodes) shared_.node_limit = true;
        }
        return shared_.timed_out.load(std::memory_order_relaxed) || shared_.node_limit.load(std::memory_order_relaxed);
    }

    void dfs(int next) {
        if (should_stop()) return;
        if (next == prefix_depth_) {
            prefix_sink_(std::vector<Color>(colors_.begin(), colors_.begin() + next));
            return;
        }
        if (next == edge_total()) {
            if (used_ > shared_.best.load()) shared_.offer(used_, colors_);
            return;
        }
        if (optimistic(next) <= shared_.best.load()) return;

        const Edge e = edges_[static_cast<std::size_t>(next)];
        // new color first: good incumbents early
        for (Color c = used_; c >= 0; --c) {
            if (!symmetry_ok(next, c)) continue;
            if (!caps_.empty() && !(fits_cap(e.u, c) && fits_cap(e.v, c))) continue;
            assign(next, c);
            bool ok = degree_order_ok(next + 1) && caps_feasible();
            if (ok && finder_ && used_ >= pattern_edges_) ok = !finder_->exists_through(grid_, e);
            if (ok) dfs(next + 1);
            unassign(next);
            if (stopped()) return;
        }
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<int> caps_;
    bool symmetry_;
    Shared& shared_;
    ColorGrid grid_;
    std::vector<Color> colors_;
    std::vector<int> count_;
    std::vector<int> palette_;
    std::vector<int> uncolored_;
    std::vector<char> introduced_;
    std::vector<int> class_of_;
    int used_ = 0;
    int pattern_edges_ = 0;
    std::optional<RainbowFinder> finder_;
    std::int64_t local_nodes_ = 0;
    std::int64_t reported_nodes_ = 0;
    int prefix_depth_ = -1;
    std::function<void(const std::vector<Color>&)> prefix_sink_;
};

inline SearchOutcome run(int n, const std::optional<Graph>& pattern, const std::vector<int>& caps, const SearchOptions& opt) {
    const auto start = Clock::now();
    Shared shared;
    shared.deadline = start + opt.budget;
    shared.max_nodes = opt.max_nodes;
    shared.best = 0;

    const int threads = std::max(1, opt.threads);
    const int edge_total = static_cast<int>(pair_count(n));
    int depth = opt.split_depth >= 0 ? opt.split_depth : (threads > 1 ? std::min(edge_total, n + 2) : 0);

    if (depth == 0) {
        Enumerator en(n, pattern, caps, opt.vertex_symmetry, shared);
        en.solve_from({});
    } else {
        std::vector<std::vector<Color>> tasks;
        {
            Enumerator en(n, pattern, caps, opt.vertex_symmetry, shared);
            en.prefixes(depth, [&](const std::vector<Color>& p) { tasks.push_back(p); });
        }
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            Enumerator en(n, pattern, caps, opt.vertex_symmetry, shared);
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                if (shared.timed_out || shared.node_limit) break;
                en.solve_from(tasks[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }

    SearchOutcome out;
    out.value = shared.best.load();
    out.nodes = shared.nodes.load();
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    out.status = shared.timed_out ? SearchStatus::Timeout : shared.node_limit ? SearchStatus::LowerBoundOnly : SearchStatus::Exact;
    if (!shared.witness.empty()) out.witness = EdgeColoring(n, EdgeColoring::relabel_first_occurrence(shared.witness));
    return out;
}

} // namespace oracle_detail

/// ar(K_n, F) by exhaustive search over colorings up to color relabeling.
///
/// A branch is cut as soon as its colored pairs hold a rainbow copy of F (that
/// copy survives every completion), or when even an all-new-colors completion
/// cannot beat the incumbent.
inline SearchOutcome ar_exact(int n, const ForestSpec& f, const SearchOptions& opt = {}) {
    if (n < 2) throw RangeError("ar_exact needs n >= 2");
    if (n > 12) throw RangeError("ar_exact is limited to n <= 12");
    Graph pattern = pattern_graph(f);
    if (pattern.order() > n) throw RangeError("pattern " + format_forest_spec(f) + " does not fit in K_" + std::to_string(n));
    if (pattern.size() <= 1) {
        SearchOutcome out; // a single edge is rainbow under every coloring
        out.value = 0;
        return out;
    }
    return oracle_detail::run(n, pattern, {}, opt);
}

/// Maximum number of colors over colorings of K_n with d_c(v_i) <= caps[i].
inline SearchOutcome max_colors_with_caps(int n, const std::vector<int>& caps, const SearchOptions& opt = {}) {
    if (n < 2 || n > 12) throw RangeError("max_colors_with_caps needs 2 <= n <= 12");
    if (static_cast<int>(caps.size()) != n) throw RangeError("need exactly n caps");
    if (!std::is_sorted(caps.begin(), caps.end())) throw RangeError("caps must be sorted ascending");
    if (caps.front() < 1 || caps.back() > n - 1) throw RangeError("caps must lie in 1..n-1");
    return oracle_detail::run(n, std::nullopt, caps, opt);
}

} // namespace antiramsey

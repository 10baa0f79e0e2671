#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "forest_spec.hpp"
#include "graph.hpp"

namespace antiramsey {

/// Dense n x n color table; -1 marks an uncolored (absent) pair.
/// Used both for complete colorings and for the oracle's partial colorings.
struct ColorGrid {
    int n = 0;
    int num_colors = 0;
    std::vector<Color> cell;

    ColorGrid() = default;
    ColorGrid(int order, int colors) : n(order), num_colors(colors), cell(static_cast<std::size_t>(order) * order, -1) {}

    explicit ColorGrid(const EdgeColoring& col) : ColorGrid(col.order(), col.num_colors()) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) set(u, v, col.color(u, v));
    }

    Color at(Vertex u, Vertex v) const { return cell[static_cast<std::size_t>(u) * n + v]; }
    void set(Vertex u, Vertex v, Color c) {
        cell[static_cast<std::size_t>(u) * n + v] = c;
        cell[static_cast<std::size_t>(v) * n + u] = c;
    }
};

/// A rainbow copy: pattern vertex i sits on host vertex vertex_map[i].
struct Embedding {
    std::vector<Vertex> vertex_map;
    struct HostEdge {
        Edge edge;
        Color color;
        bool operator==(const HostEdge&) const = default;
    };
    std::vector<HostEdge> edges; // one per pattern edge, in pattern edge order
};

/// Injective, edge-preserving, and all image colors distinct.
inline bool is_valid_embedding(const Graph& pattern, const ColorGrid& host, const Embedding& emb) {
    if (static_cast<int>(emb.vertex_map.size()) != pattern.order()) return false;
    std::vector<char> used(static_cast<std::size_t>(host.n), 0);
    for (Vertex h : emb.vertex_map) {
        if (h < 0 || h >= host.n || used[h]) return false;
        used[h] = 1;
    }
    auto pedges = pattern.edges();
    if (pedges.size() != emb.edges.size()) return false;
    std::vector<Color> seen;
    for (std::size_t i = 0; i < pedges.size(); ++i) {
        Edge img(emb.vertex_map[pedges[i].u], emb.vertex_map[pedges[i].v]);
        Color c = host.at(img.u, img.v);
        if (c < 0 || emb.edges[i].edge != img || emb.edges[i].color != c) return false;
        seen.push_back(c);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

/// Exact backtracking search for rainbow copies of a fixed forest pattern.
///
/// Components are embedded largest first, each along a DFS order rooted at a
/// maximum-degree vertex, so every non-root vertex is placed next to its
/// already-placed parent. A host vertex is rejected when it cannot offer
/// enough fresh colors towards free vertices for its remaining children.
///
/// Holds scratch buffers; one instance per thread.
class RainbowFinder {
public:
    explicit RainbowFinder(Graph pattern) : pattern_(std::move(pattern)) {
        if (!pattern_.is_forest()) throw UnsupportedError("rainbow search supports forest patterns only");
        pattern_edges_ = pattern_.edges();
        free_order_ = build_order(-1, -1);
        // one order per pattern edge, rooted at its higher-degree end
        for (const auto& e : pattern_edges_) {
            bool flip = pattern_.degree(e.v) > pattern_.degree(e.u);
            forced_orders_.push_back(flip ? build_order(e.v, e.u) : build_order(e.u, e.v));
        }
    }

    const Graph& pattern() const { return pattern_; }

    /// Any rainbow copy among the colored pairs of `host`.
    std::optional<Embedding> find(const ColorGrid& host) {
        if (pattern_.order() > host.n) return std::nullopt;
        reset(host);
        if (search(host, free_order_, 0)) return make_embedding(host);
        return std::nullopt;
    }

    /// Any rainbow copy that uses the pair e.
    std::optional<Embedding> find_through(const ColorGrid& host, Edge e) {
        if (pattern_.order() > host.n || host.at(e.u, e.v) < 0) return std::nullopt;
        // the first two steps of each order are a pattern edge; pin them to e both ways round
        for (const auto& order : forced_orders_)
            for (int flip = 0; flip < 2; ++flip) {
                reset(host);
                pinned_[0] = flip ? e.v : e.u;
                pinned_[1] = flip ? e.u : e.v;
                bool hit = search(host, order, 0);
                pinned_[0] = pinned_[1] = -1;
                if (hit) return make_embedding(host);
            }
        return std::nullopt;
    }

    bool exists_through(const ColorGrid& host, Edge e) { return find_through(host, e).has_value(); }

    /// Search nodes visited since construction.
    long long nodes() const { return nodes_; }

private:
    struct Step {
        Vertex vertex; // pattern vertex placed at this step
        Vertex parent; // pattern parent, -1 for a component root
        int children;  // pattern children placed after it
    };

    std::vector<Step> build_order(Vertex first, Vertex second) const {
        const int p = pattern_.order();
        auto comps = pattern_.components();
        std::vector<char> done(static_cast<std::size_t>(p), 0);
        std::vector<Step> order;
        order.reserve(static_cast<std::size_t>(p));

        auto dfs = [&](Vertex root, Vertex pinned_child) {
            // iterative preorder DFS; pinned_child is visited first
            std::vector<std::pair<Vertex, Vertex>> stack{{root, -1}};
            while (!stack.empty()) {
                auto [x, par] = stack.back();
                stack.pop_back();
                if (done[x]) continue;
                done[x] = 1;
                int kids = 0;
                for (Vertex w : pattern_.neighbors(x))
                    if (!done[w]) ++kids;
                order.push_back(Step{x, par, kids});
                std::vector<Vertex> next;
                for (Vertex w : pattern_.neighbors(x))
                    if (!done[w]) next.push_back(w);
                std::stable_sort(next.begin(), next.end(), [&](Vertex a, Vertex b) { return pattern_.degree(a) < pattern_.degree(b); });
                if (pinned_child >= 0 && x == root) {
                    auto it = std::find(next.begin(), next.end(), pinned_child);
                    if (it != next.end()) {
                        next.erase(it);
                        next.push_back(pinned_child);
                    }
                }
                for (Vertex w : next) stack.emplace_back(w, x);
            }
        };

        if (first >= 0) dfs(first, second);
        std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (const auto& comp : comps) {
            if (done[comp.front()]) continue;
            Vertex root = comp.front();
            for (Vertex x : comp)
                if (pattern_.degree(x) > pattern_.degree(root)) root = x;
            dfs(root, -1);
        }
        return order;
    }

    void reset(const ColorGrid& host) {
        img_.assign(static_cast<std::size_t>(pattern_.order()), -1);
        host_used_.assign(static_cast<std::size_t>(host.n), 0);
        color_used_.assign(static_cast<std::size_t>(host.num_colors), 0);
        stamp_.assign(static_cast<std::size_t>(host.num_colors), 0);
        stamp_round_ = 0;
        pinned_.assign(2, -1);
        colors_left_ = count_present_colors(host);
        edges_left_ = static_cast<int>(pattern_edges_.size());
    }

    static int count_present_colors(const ColorGrid& host) {
        std::vector<char> seen(static_cast<std::size_t>(host.num_colors), 0);
        int k = 0;
        for (int u = 0; u < host.n; ++u)
            for (int v = u + 1; v < host.n; ++v) {
                Color c = host.at(u, v);
                if (c >= 0 && !seen[c]) {
                    seen[c] = 1;
                    ++k;
                }
            }
        return k;
    }

    // Distinct unused colors on pairs from h to unused host vertices, capped at `need`.
    bool has_fresh_palette(const ColorGrid& host, Vertex h, int need) {
        if (need <= 0) return true;
        if (++stamp_round_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            stamp_round_ = 1;
        }
        int found = 0;
        const Color* row = &host.cell[static_cast<std::size_t>(h) * host.n];
        for (Vertex w = 0; w < host.n; ++w) {
            if (w == h || host_used_[w]) continue;
            Color c = row[w];
            if (c < 0 || color_used_[c] || stamp_[c] == stamp_round_) continue;
            stamp_[c] = stamp_round_;
            if (++found >= need) return true;
        }
        return false;
    }

    bool search(const ColorGrid& host, const std::vector<Step>& order, std::size_t depth) {
        ++nodes_;
        if (depth == order.size()) return true;
        if (colors_left_ < edges_left_) return false;
        const Step& st = order[depth];
        Vertex lo = 0, hi = host.n - 1;
        if (depth < 2 && pinned_[depth] >= 0) lo = hi = pinned_[depth];

        for (Vertex h = lo; h <= hi; ++h) {
            if (host_used_[h]) continue;
            Color c = -1;
            if (st.parent >= 0) {
                c = host.at(img_[st.parent], h);
                if (c < 0 || color_used_[c]) continue;
                color_used_[c] = 1;
            }
            host_used_[h] = 1;
            if (has_fresh_palette(host, h, st.children)) {
                img_[st.vertex] = h;
                if (c >= 0) {
                    --colors_left_;
                    --edges_left_;
                }
                if (search(host, order, depth + 1)) return true;
                if (c >= 0) {
                    ++colors_left_;
                    ++edges_left_;
                }
                img_[st.vertex] = -1;
            }
            host_used_[h] = 0;
            if (c >= 0) color_used_[c] = 0;
        }
        return false;
    }

    Embedding make_embedding(const ColorGrid& host) const {
        Embedding emb;
        emb.vertex_map = img_;
        for (const auto& e : pattern_edges_) {
            Edge img(img_[e.u], img_[e.v]);
            emb.edges.push_back({img, host.at(img.u, img.v)});
        }
        return emb;
    }

    Graph pattern_;
    std::vector<Edge> pattern_edges_;
    std::vector<Step> free_order_;
    std::vector<std::vector<Step>> forced_orders_;

    std::vector<Vertex> img_;
    std::vector<char> host_used_;
    std::vector<char> color_used_;
    std::vector<unsigned> stamp_;
    unsigned stamp_round_ = 0;
    std::vector<Vertex> pinned_{-1, -1};
    int colors_left_ = 0;
    int edges_left_ = 0;
    long long nodes_ = 0;
};

inline Graph pattern_graph(const ForestSpec& f) {
    if (!f.is_forest()) throw UnsupportedError("rainbow detection does not handle " + format_forest_spec(f));
    return to_graph(f);
}

/// Some rainbow copy of f in the coloring, or nullopt when none exists.
inline std::optional<Embedding> find_rainbow(const EdgeColoring& col, const ForestSpec& f) {
    RainbowFinder finder(pattern_graph(f));
    return finder.find(ColorGrid(col));
}

/// True iff the coloring contains no rainbow copy of f.
inline bool verify_no_rainbow(const EdgeColoring& col, const ForestSpec& f) { return !find_rainbow(col, f).has_value(); }

} // namespace antiramsey

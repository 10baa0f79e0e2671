#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace antiramsey {

using Color = int;

/// Surjective assignment of colors 0..k-1 to the edges of K_n.
///
/// Colors are stored per edge in lexicographic pair order. The id space is
/// dense: every color in 0..k-1 is used by at least one edge.
class EdgeColoring {
public:
    EdgeColoring() = default;

    EdgeColoring(int n, std::vector<Color> colors) : n_(n), colors_(std::move(colors)) {
        if (n < 2) throw RangeError("edge coloring needs n >= 2");
        if (static_cast<std::int64_t>(colors_.size()) != pair_count(n))
            throw RangeError("edge coloring of K_" + std::to_string(n) + " needs " + std::to_string(pair_count(n)) + " colors");
        Color top = -1;
        for (Color c : colors_) {
            if (c < 0) throw RangeError("negative color id");
            top = std::max(top, c);
        }
        std::vector<char> used(static_cast<std::size_t>(top) + 1, 0);
        for (Color c : colors_) used[c] = 1;
        if (std::find(used.begin(), used.end(), 0) != used.end()) throw RangeError("color ids are not dense");
        k_ = top + 1;
    }

    /// Builds a coloring from a per-pair function, then relabels by first occurrence.
    static EdgeColoring from_function(int n, const std::function<Color(Vertex, Vertex)>& fn) {
        std::vector<Color> raw;
        raw.reserve(static_cast<std::size_t>(pair_count(n)));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) raw.push_back(fn(u, v));
        return EdgeColoring(n, relabel_first_occurrence(raw));
    }

    static EdgeColoring monochromatic(int n) { return EdgeColoring(n, std::vector<Color>(static_cast<std::size_t>(pair_count(n)), 0)); }

    static EdgeColoring rainbow(int n) {
        std::vector<Color> c(static_cast<std::size_t>(pair_count(n)));
        std::iota(c.begin(), c.end(), 0);
        return EdgeColoring(n, std::move(c));
    }

    int order() const { return n_; }
    int num_colors() const { return k_; }

    Color color(Vertex u, Vertex v) const { return colors_[static_cast<std::size_t>(edge_index(n_, Edge(u, v)))]; }
    Color color(Edge e) const { return colors_[static_cast<std::size_t>(edge_index(n_, e))]; }

    /// Per-edge colors in lexicographic pair order.
    std::span<const Color> raw() const { return colors_; }

    /// Same partition of the edges, ids renumbered by first occurrence in lexicographic order.
    EdgeColoring canonicalized() const { return EdgeColoring(n_, relabel_first_occurrence(colors_)); }

    /// Edges of every color class, each class in lexicographic order.
    std::vector<std::vector<Edge>> color_classes() const {
        std::vector<std::vector<Edge>> out(static_cast<std::size_t>(k_));
        std::size_t i = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) out[colors_[i++]].emplace_back(u, v);
        return out;
    }

    /// d_c(v): number of distinct colors on edges at v.
    int color_degree(Vertex v) const {
        check_vertex(v);
        std::vector<Color> pal;
        pal.reserve(static_cast<std::size_t>(n_ - 1));
        for (Vertex w = 0; w < n_; ++w)
            if (w != v) pal.push_back(color(v, w));
        std::sort(pal.begin(), pal.end());
        return static_cast<int>(std::unique(pal.begin(), pal.end()) - pal.begin());
    }

    int max_color_degree() const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, color_degree(v));
        return d;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw RangeError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }

    bool operator==(const EdgeColoring&) const = default;

    static std::vector<Color> relabel_first_occurrence(std::span<const Color> raw) {
        std::vector<Color> out(raw.size());
        std::vector<Color> map;
        Color next = 0;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            Color c = raw[i];
            if (c < 0) throw RangeError("negative color id");
            if (static_cast<std::size_t>(c) >= map.size()) map.resize(static_cast<std::size_t>(c) + 1, -1);
            if (map[c] < 0) map[c] = next++;
            out[i] = map[c];
        }
        return out;
    }

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Color> colors_;
};

/// C(v), and the subset of it stared at v.
struct ColorProfile {
    Vertex vertex = 0;
    std::vector<Color> palette;
    std::vector<Color> stared;
};

/// A color is stared at v when every edge of its class is incident to v.
/// A single-edge class therefore counts as stared at both of its endpoints.
inline ColorProfile color_profile(const EdgeColoring& col, Vertex v) {
    col.check_vertex(v);
    const int n = col.order();
    std::vector<int> at_v(static_cast<std::size_t>(col.num_colors()), 0);
    std::vector<int> total(static_cast<std::size_t>(col.num_colors()), 0);
    for (Color c : col.raw()) ++total[c];
    for (Vertex w = 0; w < n; ++w)
        if (w != v) ++at_v[col.color(v, w)];
    ColorProfile prof{v, {}, {}};
    for (Color c = 0; c < col.num_colors(); ++c) {
        if (at_v[c] == 0) continue;
        prof.palette.push_back(c);
        if (at_v[c] == total[c]) prof.stared.push_back(c);
    }
    return prof;
}

/// Spanning subgraph with exactly one edge per color, containing `forced`.
/// Classes without a forced edge contribute their lexicographically least edge.
inline Graph representing_subgraph(const EdgeColoring& col, std::span<const Edge> forced = {}) {
    const int n = col.order();
    std::vector<char> taken(static_cast<std::size_t>(col.num_colors()), 0);
    Graph g(n);
    for (const auto& e : forced) {
        if (e.u < 0 || e.v >= n || e.u == e.v) throw RangeError("forced edge out of range");
        Color c = col.color(e);
        if (taken[c]) throw MismatchError("forced edges share color " + std::to_string(c));
        taken[c] = 1;
        g.add_edge(e.u, e.v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Color c = col.color(u, v);
            if (!taken[c]) {
                taken[c] = 1;
                g.add_edge(u, v);
            }
        }
    return g;
}

/// floor((sum p_i - n) / 2) + 1: the most colors K_n can carry with d_c(v_i) <= p_i,
/// under 1 <= p_1 <= ... <= p_n <= n/3.
inline std::int64_t lemma2_bound(std::span<const int> caps) {
    const auto n = static_cast<std::int64_t>(caps.size());
    if (n < 2) throw RangeError("lemma2_bound: need at least 2 caps");
    if (!std::is_sorted(caps.begin(), caps.end())) throw RangeError("lemma2_bound: caps must be sorted ascending");
    if (caps.front() < 1) throw RangeError("lemma2_bound: caps must be >= 1");
    if (3 * static_cast<std::int64_t>(caps.back()) > n)
        throw HypothesisError("lemma2_bound: largest cap exceeds n/3");
    std::int64_t sum = std::accumulate(caps.begin(), caps.end(), std::int64_t{0});
    return (sum - n) / 2 + 1;
}

/// Outcome of checking one coloring against per-vertex palette caps.
struct CapCheck {
    bool caps_hold = false;   // d_c(v_i) <= p_i for all i
    int colors = 0;
    std::int64_t bound = 0;
    bool within_bound = false; // colors <= bound; only meaningful when caps_hold
};

inline CapCheck lemma2_check(const EdgeColoring& col, std::span<const int> caps) {
    if (static_cast<int>(caps.size()) != col.order()) throw MismatchError("lemma2_check: need one cap per vertex");
    CapCheck out;
    out.bound = lemma2_bound(caps);
    out.colors = col.num_colors();
    out.caps_hold = true;
    for (Vertex v = 0; v < col.order(); ++v)
        if (col.color_degree(v) > caps[static_cast<std::size_t>(v)]) out.caps_hold = false;
    out.within_bound = out.colors <= out.bound;
    return out;
}

// Coloring file format:
//   antiramsey-coloring v1
//   n <n>
//   u v c        (C(n,2) lines, u<v, lexicographic)

inline constexpr std::string_view kColoringHeader = "antiramsey-coloring v1";

inline void write_coloring(std::ostream& os, const EdgeColoring& col) {
    os << kColoringHeader << '\n' << "n " << col.order() << '\n';
    const int n = col.order();
    std::size_t i = 0;
    auto raw = col.raw();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) os << u << ' ' << v << ' ' << raw[i++] << '\n';
}

inline std::string to_coloring_text(const EdgeColoring& col) {
    std::ostringstream os;
    write_coloring(os, col);
    return os.str();
}

/// Reads the file format and canonicalizes color ids by first occurrence.
inline EdgeColoring read_coloring(std::istream& is) {
    std::string line;
    auto next_line = [&](int& lineno) -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    };
    int lineno = 0;
    if (!next_line(lineno) || line != kColoringHeader) throw ParseError("coloring: missing \"antiramsey-coloring v1\" header");
    if (!next_line(lineno)) throw ParseError("coloring: missing \"n <n>\" line");
    int n = -1;
    {
        std::istringstream ls(line);
        std::string tag, rest;
        if (!(ls >> tag >> n) || tag != "n" || (ls >> rest)) throw ParseError("coloring: malformed \"n <n>\" line");
        if (n < 2 || n > 4096) throw ParseError("coloring: n out of range");
    }
    std::vector<Color> raw;
    raw.reserve(static_cast<std::size_t>(pair_count(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!next_line(lineno)) throw ParseError("coloring: truncated, expected edge " + std::to_string(u) + " " + std::to_string(v));
            std::istringstream ls(line);
            int a = -1, b = -1;
            long long c = -1;
            std::string rest;
            if (!(ls >> a >> b >> c) || (ls >> rest)) throw ParseError("coloring: malformed line " + std::to_string(lineno));
            if (a != u || b != v) throw ParseError("coloring: line " + std::to_string(lineno) + " out of lexicographic order");
            if (c < 0 || c > 1'000'000'000) throw ParseError("coloring: bad color id on line " + std::to_string(lineno));
            raw.push_back(static_cast<Color>(c));
        }
    while (next_line(lineno))
        if (line.find_first_not_of(" \t") != std::string::npos) throw ParseError("coloring: trailing data on line " + std::to_string(lineno));
    return EdgeColoring(n, EdgeColoring::relabel_first_occurrence(raw));
}

inline EdgeColoring parse_coloring(const std::string& text) {
    std::istringstream is(text);
    return read_coloring(is);
}

} // namespace antiramsey

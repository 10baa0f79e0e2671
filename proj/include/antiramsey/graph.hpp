#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace antiramsey {

using Vertex = int;

/// Unordered pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr auto operator<=>(const Edge&) const = default;
};

/// Number of unordered pairs on n vertices.
constexpr std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

/// Position of edge (u,v), u<v, in the lexicographic order of all pairs of K_n.
constexpr int edge_index(int n, Edge e) { return e.u * (2 * n - e.u - 1) / 2 + (e.v - e.u - 1); }

/// All pairs of K_n in lexicographic order.
inline std::vector<Edge> complete_edges(int n) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(pair_count(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_order(n)) {}

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const auto& e : edges) add_edge(e.u, e.v);
    }

    static Graph complete(int n) { return Graph(n, complete_edges(n)); }

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    void add_edge(Vertex a, Vertex b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw RangeError("self-loop at vertex " + std::to_string(a));
        if (has_edge(a, b)) return;
        insert_sorted(adj_[a], b);
        insert_sorted(adj_[b], a);
        ++edge_count_;
    }

    void remove_edge(Vertex a, Vertex b) {
        if (!has_edge(a, b)) return;
        erase_sorted(adj_[a], b);
        erase_sorted(adj_[b], a);
        --edge_count_;
    }

    bool has_edge(Vertex a, Vertex b) const {
        if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
        const auto& row = adj_[a];
        return std::binary_search(row.begin(), row.end(), b);
    }

    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }

    int max_degree() const {
        int d = 0;
        for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.size()));
        return d;
    }

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < order(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Vertices with at least one incident edge.
    int non_isolated_count() const {
        return static_cast<int>(std::count_if(adj_.begin(), adj_.end(), [](const auto& r) { return !r.empty(); }));
    }

    bool is_complete() const { return edge_count_ == pair_count(order()); }

    /// Acyclic: every connected component with c vertices has c-1 edges.
    bool is_forest() const {
        return static_cast<int>(components().size()) == order() - edge_count_;
    }

    /// Connected components, each listed in ascending vertex order.
    std::vector<std::vector<Vertex>> components() const {
        std::vector<int> seen(adj_.size(), 0);
        std::vector<std::vector<Vertex>> out;
        for (int s = 0; s < order(); ++s) {
            if (seen[s]) continue;
            std::vector<Vertex> comp{s};
            seen[s] = 1;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (Vertex w : adj_[comp[i]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    /// Side assignment (0/1) of a proper 2-coloring, or nullopt when an odd cycle exists.
    std::optional<std::vector<int>> bipartition() const {
        std::vector<int> side(adj_.size(), -1);
        for (int s = 0; s < order(); ++s) {
            if (side[s] >= 0) continue;
            side[s] = 0;
            std::vector<Vertex> queue{s};
            for (std::size_t i = 0; i < queue.size(); ++i) {
                Vertex x = queue[i];
                for (Vertex w : adj_[x]) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[x];
                        queue.push_back(w);
                    } else if (side[w] == side[x]) {
                        return std::nullopt;
                    }
                }
            }
        }
        return side;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    static std::size_t check_order(int n) {
        if (n < 0) throw RangeError("negative vertex count");
        return static_cast<std::size_t>(n);
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= order())
            throw RangeError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
    }

    static void insert_sorted(std::vector<Vertex>& row, Vertex x) {
        row.insert(std::lower_bound(row.begin(), row.end(), x), x);
    }

    static void erase_sorted(std::vector<Vertex>& row, Vertex x) {
        row.erase(std::lower_bound(row.begin(), row.end(), x));
    }

    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

/// Edge-list text form: "n <n>" then one "u v" line per edge (u<v, lexicographic).
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << "n " << g.order() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

inline Graph read_edge_list(std::istream& is) {
    std::string line;
    std::optional<Graph> g;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        if (!g) {
            std::string tag;
            int n = -1;
            if (!(ls >> tag >> n) || tag != "n" || n < 0)
                throw ParseError("edge list: expected \"n <n>\" header on line " + std::to_string(lineno));
            g.emplace(n);
            continue;
        }
        int u = -1, v = -1;
        if (!(ls >> u >> v)) throw ParseError("edge list: bad edge on line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest) throw ParseError("edge list: trailing data on line " + std::to_string(lineno));
        try {
            g->add_edge(u, v);
        } catch (const RangeError& err) {
            throw ParseError("edge list line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    if (!g) throw ParseError("edge list: missing \"n <n>\" header");
    return *g;
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

} // namespace antiramsey

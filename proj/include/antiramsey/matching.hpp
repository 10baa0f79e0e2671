#pragma once

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "forest_spec.hpp"
#include "graph.hpp"

namespace antiramsey {

namespace detail {

// Kuhn's augmenting-path search from the left side of a bipartition.
inline int bipartite_matching(const Graph& g, const std::vector<int>& side) {
    const int n = g.order();
    std::vector<Vertex> mate(n, -1);
    std::vector<int> stamp(n, 0);
    int round = 0;

    auto augment = [&](auto&& self, Vertex x) -> bool {
        for (Vertex y : g.neighbors(x)) {
            if (stamp[y] == round) continue;
            stamp[y] = round;
            if (mate[y] < 0 || self(self, mate[y])) {
                mate[y] = x;
                mate[x] = y;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (Vertex x = 0; x < n; ++x) {
        if (side[x] != 0 || mate[x] >= 0) continue;
        ++round;
        if (augment(augment, x)) ++size;
    }
    return size;
}

} // namespace detail

/// Maximum matching size by augmenting paths.
///
/// Accepts complete graphs and bipartite graphs (forests included); anything
/// with an odd cycle would need blossom contraction and is rejected.
inline int matching_number(const Graph& g) {
    if (g.is_complete()) return g.order() / 2;
    auto side = g.bipartition();
    if (!side) throw UnsupportedError("matching_number: only forests, bipartite and complete graphs are supported");
    return detail::bipartite_matching(g, *side);
}

/// Leaf-greedy matching on a forest: scanning a reverse BFS order, match each
/// still-free vertex to its free parent. Optimal on forests.
inline int tree_matching_number(const Graph& g) {
    if (!g.is_forest()) throw UnsupportedError("tree_matching_number: graph is not a forest");
    const int n = g.order();
    std::vector<Vertex> parent(n, -1), order;
    std::vector<char> seen(n, 0);
    order.reserve(n);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::size_t head = order.size();
        order.push_back(root);
        for (; head < order.size(); ++head)
            for (Vertex w : g.neighbors(order[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = order[head];
                    order.push_back(w);
                }
    }
    std::vector<char> matched(n, 0);
    int size = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it, p = parent[v];
        if (p >= 0 && !matched[v] && !matched[p]) {
            matched[v] = matched[p] = 1;
            ++size;
        }
    }
    return size;
}

namespace detail {

inline void require_beta_hypothesis(const SpiderSpec& sp) {
    if (sp.legs.size() < 2) throw HypothesisError("spider beta needs at least 2 legs");
    for (int a : sp.legs)
        if (a < 2) throw HypothesisError("spider beta is only defined when every leg has length >= 2");
}

} // namespace detail

/// beta(T) = min over edges e of nu(T - e).
inline int spider_beta(const SpiderSpec& sp) {
    detail::require_beta_hypothesis(sp);
    Graph t = to_graph(sp);
    int best = t.order();
    for (const auto& e : t.edges()) {
        Graph h = t;
        h.remove_edge(e.u, e.v);
        best = std::min(best, tree_matching_number(h));
    }
    return best;
}

/// min over unordered pairs of distinct edges {e1, e2} of nu(T - e1 - e2).
inline int spider_beta_pair(const SpiderSpec& sp) {
    detail::require_beta_hypothesis(sp);
    Graph t = to_graph(sp);
    auto edges = t.edges();
    int best = t.order();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            Graph h = t;
            h.remove_edge(edges[i].u, edges[i].v);
            h.remove_edge(edges[j].u, edges[j].v);
            best = std::min(best, tree_matching_number(h));
        }
    return best;
}

/// Number of legs of even length; the beta-pair equality case is "exactly one".
inline int even_leg_count(const SpiderSpec& sp) {
    return static_cast<int>(std::count_if(sp.legs.begin(), sp.legs.end(), [](int a) { return a % 2 == 0; }));
}

} // namespace antiramsey

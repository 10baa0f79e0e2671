#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "forest_spec.hpp"
#include "graph.hpp"

namespace antiramsey {

enum class CertificateKind { JoinPlusStarAvoider, CliquePlusOne, JoinPlusRConstant, StarPlusAvoider, MatchingExtremal, SpiderJoin };

inline std::string_view certificate_kind_name(CertificateKind k) {
    switch (k) {
    case CertificateKind::JoinPlusStarAvoider: return "JoinPlusStarAvoider";
    case CertificateKind::CliquePlusOne: return "CliquePlusOne";
    case CertificateKind::JoinPlusRConstant: return "JoinPlusRConstant";
    case CertificateKind::StarPlusAvoider: return "StarPlusAvoider";
    case CertificateKind::MatchingExtremal: return "MatchingExtremal";
    case CertificateKind::SpiderJoin: return "SpiderJoin";
    }
    return "?";
}

inline CertificateKind parse_certificate_kind(std::string_view s) {
    for (auto k : {CertificateKind::JoinPlusStarAvoider, CertificateKind::CliquePlusOne, CertificateKind::JoinPlusRConstant,
                   CertificateKind::StarPlusAvoider, CertificateKind::MatchingExtremal, CertificateKind::SpiderJoin})
        if (certificate_kind_name(k) == s) return k;
    throw ParseError("unknown certificate kind \"" + std::string(s) + "\"");
}

/// Structural description of a generated coloring.
///
/// Layouts (J = {0..join_size-1}, I = the remaining vertices):
///   avoider kinds   pairs touching J are rainbow and unique; inside I every
///                   vertex sees at most palette_cap colors
///   constant kinds  pairs touching J are rainbow and unique; pairs inside I use
///                   at most inner_colors colors
///   CliquePlusOne   pairs inside {0..clique_size-1} rainbow; every other pair
///                   carries one shared residual color
///
/// Each layout is paired with a predicate on the target pattern alone
/// ("pattern_blocked") that rules out a rainbow copy in any coloring of that layout.
struct ConstructionCertificate {
    CertificateKind kind = CertificateKind::JoinPlusStarAvoider;
    int n = 0;
    std::string forest;
    int join_size = 0;
    int clique_size = 0;
    int palette_cap = 0;
    int inner_colors = 0;
    int colors = 0;
    int branch = 0; // star forests: join branch i (>= 1) or 0 for the matching-type branch
    std::vector<std::string> conditions;

    bool operator==(const ConstructionCertificate&) const = default;
};

struct ConditionResult {
    std::string name;
    bool ok = false;
};

namespace cert_detail {

inline bool uses_join(CertificateKind k) { return k != CertificateKind::CliquePlusOne; }

inline bool uses_avoider(CertificateKind k) {
    return k == CertificateKind::JoinPlusStarAvoider || k == CertificateKind::StarPlusAvoider;
}

inline std::vector<std::string> condition_names(CertificateKind k) {
    std::vector<std::string> out{"color_count"};
    if (k == CertificateKind::CliquePlusOne) {
        out.insert(out.end(), {"clique_rainbow", "outside_single_color"});
    } else {
        out.push_back("join_rainbow");
        out.push_back(uses_avoider(k) ? "inner_palette_cap" : "inner_color_budget");
    }
    out.push_back("pattern_blocked");
    return out;
}

/// Calls fn(subset) for every vertex subset of size <= max_size; stops when fn returns true.
template <typename Fn>
bool any_subset(int order, int max_size, Fn&& fn) {
    std::vector<Vertex> cur;
    std::int64_t budget = 20'000'000;
    auto rec = [&](auto&& self, Vertex start) -> bool {
        if (--budget < 0) throw UnsupportedError("pattern_blocked: pattern too large for subset enumeration");
        if (fn(cur)) return true;
        if (static_cast<int>(cur.size()) == max_size) return false;
        for (Vertex v = start; v < order; ++v) {
            cur.push_back(v);
            if (self(self, v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

/// Avoider layout: a rainbow copy needs S (the pattern vertices on J, |S| <= j)
/// such that every x outside S has deg(x) <= cap + |N(x) & S|.
inline bool blocked_by_avoider(const Graph& f, int join, int cap) {
    std::vector<char> in(static_cast<std::size_t>(f.order()), 0);
    bool embeddable = any_subset(f.order(), join, [&](const std::vector<Vertex>& s) {
        std::fill(in.begin(), in.end(), 0);
        for (Vertex v : s) in[v] = 1;
        for (Vertex x = 0; x < f.order(); ++x) {
            if (in[x]) continue;
            int into = 0;
            for (Vertex w : f.neighbors(x)) into += in[w];
            if (f.degree(x) > cap + into) return false;
        }
        return true;
    });
    return !embeddable;
}

/// Constant layout: a rainbow copy needs S, |S| <= j, leaving at most r edges in F - S.
inline bool blocked_by_constant(const Graph& f, int join, int r) {
    auto edges = f.edges();
    std::vector<char> in(static_cast<std::size_t>(f.order()), 0);
    bool embeddable = any_subset(f.order(), join, [&](const std::vector<Vertex>& s) {
        std::fill(in.begin(), in.end(), 0);
        for (Vertex v : s) in[v] = 1;
        int left = 0;
        for (const auto& e : edges)
            if (!in[e.u] && !in[e.v]) ++left;
        return left <= r;
    });
    return !embeddable;
}

/// Clique layout: a rainbow copy has at most one residual edge, so some F - e
/// (or F itself) has all its non-isolated vertices inside the clique.
inline bool blocked_by_clique(const Graph& f, int clique) {
    if (f.non_isolated_count() <= clique) return false;
    for (const auto& e : f.edges()) {
        Graph h = f;
        h.remove_edge(e.u, e.v);
        if (h.non_isolated_count() <= clique) return false;
    }
    return true;
}

} // namespace cert_detail

inline ConstructionCertificate make_certificate(CertificateKind kind, int n, const ForestSpec& f) {
    ConstructionCertificate c;
    c.kind = kind;
    c.n = n;
    c.forest = format_forest_spec(f);
    c.conditions = cert_detail::condition_names(kind);
    return c;
}

/// Pattern-side condition alone: no coloring with this layout holds a rainbow f.
inline bool pattern_blocked(const ConstructionCertificate& cert, const ForestSpec& f) {
    Graph g = to_graph(f);
    switch (cert.kind) {
    case CertificateKind::CliquePlusOne: return cert_detail::blocked_by_clique(g, cert.clique_size);
    case CertificateKind::JoinPlusStarAvoider:
    case CertificateKind::StarPlusAvoider: return cert_detail::blocked_by_avoider(g, cert.join_size, cert.palette_cap);
    case CertificateKind::JoinPlusRConstant:
    case CertificateKind::MatchingExtremal:
    case CertificateKind::SpiderJoin: return cert_detail::blocked_by_constant(g, cert.join_size, cert.inner_colors);
    }
    return false;
}

/// Evaluates every named condition of the certificate.
inline std::vector<ConditionResult> evaluate_certificate(const EdgeColoring& col, const ConstructionCertificate& cert, const ForestSpec& f) {
    if (cert.n != col.order())
        throw MismatchError("certificate is for n=" + std::to_string(cert.n) + " but the coloring has n=" + std::to_string(col.order()));
    if (cert.forest != format_forest_spec(canonical(f)))
        throw MismatchError("certificate targets " + cert.forest + ", not " + format_forest_spec(f));

    const int n = col.order();
    std::vector<int> class_size(static_cast<std::size_t>(col.num_colors()), 0);
    for (Color c : col.raw()) ++class_size[c];

    auto join_rainbow = [&] {
        const int j = cert.join_size;
        if (j < 0 || j > n) return false;
        for (int u = 0; u < j; ++u)
            for (int v = u + 1; v < n; ++v)
                if (class_size[col.color(u, v)] != 1) return false;
        return true;
    };
    auto inner_palette_cap = [&] {
        const int j = cert.join_size;
        for (int v = j; v < n; ++v) {
            std::vector<Color> pal;
            for (int w = j; w < n; ++w)
                if (w != v) pal.push_back(col.color(v, w));
            std::sort(pal.begin(), pal.end());
            if (std::unique(pal.begin(), pal.end()) - pal.begin() > cert.palette_cap) return false;
        }
        return true;
    };
    auto inner_color_budget = [&] {
        std::vector<Color> used;
        for (int u = cert.join_size; u < n; ++u)
            for (int v = u + 1; v < n; ++v) used.push_back(col.color(u, v));
        std::sort(used.begin(), used.end());
        return std::unique(used.begin(), used.end()) - used.begin() <= cert.inner_colors;
    };
    auto clique_rainbow = [&] {
        const int m = cert.clique_size;
        if (m < 0 || m > n) return false;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (class_size[col.color(u, v)] != 1) return false;
        return true;
    };
    auto outside_single_color = [&] {
        const int m = cert.clique_size;
        Color residual = -1;
        for (int u = 0; u < n; ++u)
            for (int v = std::max(u + 1, m); v < n; ++v) {
                Color c = col.color(u, v);
                if (residual < 0) residual = c;
                if (c != residual) return false;
            }
        return true;
    };

    std::vector<ConditionResult> out;
    for (const auto& name : cert.conditions) {
        bool ok = false;
        if (name == "color_count") ok = col.num_colors() == cert.colors;
        else if (name == "join_rainbow") ok = join_rainbow();
        else if (name == "inner_palette_cap") ok = inner_palette_cap();
        else if (name == "inner_color_budget") ok = inner_color_budget();
        else if (name == "clique_rainbow") ok = clique_rainbow();
        else if (name == "outside_single_color") ok = outside_single_color();
        else if (name == "pattern_blocked") ok = pattern_blocked(cert, f);
        else throw MismatchError("unknown certificate condition \"" + name + "\"");
        out.push_back({name, ok});
    }
    // a certificate must carry its full condition set for its kind
    if (cert.conditions != cert_detail::condition_names(cert.kind)) out.push_back({"condition_set", false});
    return out;
}

/// True iff every structural condition holds; then col has no rainbow copy of f.
inline bool check_certificate(const EdgeColoring& col, const ConstructionCertificate& cert, const ForestSpec& f) {
    auto results = evaluate_certificate(col, cert, f);
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok; });
}

} // namespace antiramsey

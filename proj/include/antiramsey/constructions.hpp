#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "forest_spec.hpp"
#include "formulas.hpp"
#include "matching.hpp"

namespace antiramsey {

/// A generated coloring together with its certificate.
struct Construction {
    EdgeColoring coloring;
    ConstructionCertificate certificate;
};

namespace construct_detail {

/// Color table under construction; ids are handed out in call order.
class Palette {
public:
    explicit Palette(int n) : n_(n), cell_(static_cast<std::size_t>(pair_count(n)), -1) {}

    Color fresh() { return next_++; }
    void paint(Vertex u, Vertex v, Color c) { cell_[static_cast<std::size_t>(edge_index(n_, Edge(u, v)))] = c; }
    bool painted(Vertex u, Vertex v) const { return cell_[static_cast<std::size_t>(edge_index(n_, Edge(u, v)))] >= 0; }

    /// Every pair with an endpoint below j gets its own fresh color, lexicographically.
    void rainbow_join(int j) {
        for (int u = 0; u < j; ++u)
            for (int v = u + 1; v < n_; ++v) paint(u, v, fresh());
    }

    void rainbow_clique(int m) {
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v) paint(u, v, fresh());
    }

    /// All still-unpainted pairs get one new color.
    void fill_rest() {
        Color c = -1;
        for (auto& x : cell_)
            if (x < 0) {
                if (c < 0) c = fresh();
                x = c;
            }
    }

    EdgeColoring finish() && { return EdgeColoring(n_, std::move(cell_)); }

private:
    int n_;
    Color next_ = 0;
    std::vector<Color> cell_;
};

/// Rainbow near-(p-2)-regular graph on vertices offset..offset+m-1 painted with fresh colors.
/// Offsets 1..floor((p-2)/2) around the cycle, plus a matching when p-2 is odd:
/// opposite vertices when m is even, or pairs (i, i+(m-1)/2) for i < (m-1)/2 when m is odd
/// (the last vertex then keeps degree p-3).
inline void paint_avoider_core(Palette& pal, int offset, int m, int p) {
    const int d = p - 2;
    std::vector<Edge> core;
    for (int step = 1; step <= d / 2; ++step)
        for (int i = 0; i < m; ++i) core.emplace_back(i, (i + step) % m);
    if (d % 2 == 1) {
        if (m % 2 == 0) {
            for (int i = 0; i < m / 2; ++i) core.emplace_back(i, i + m / 2);
        } else {
            const int half = (m - 1) / 2;
            for (int i = 0; i < half; ++i) core.emplace_back(i, i + half);
        }
    }
    std::sort(core.begin(), core.end());
    core.erase(std::unique(core.begin(), core.end()), core.end());
    for (const auto& e : core) pal.paint(offset + e.u, offset + e.v, pal.fresh());
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw RangeError(what);
}

} // namespace construct_detail

/// floor((p-2)n/2) + 1 colors, every vertex sees at most p-1 of them: no rainbow K_{1,p}.
/// The rainbow part is the near-regular circulant; all other pairs share the last color.
inline EdgeColoring construct_star_avoider(int n, int p) {
    construct_detail::require(p >= 2, "star avoider needs p >= 2");
    construct_detail::require(n >= p + 1, "star avoider needs n >= p + 1");
    construct_detail::Palette pal(n);
    construct_detail::paint_avoider_core(pal, 0, n, p);
    pal.fill_rest();
    return std::move(pal).finish();
}

namespace construct_detail {

/// Rainbow join on J = {0..j-1}, star avoider for K_{1,p} on the rest.
inline EdgeColoring join_avoider(int n, int j, int p) {
    Palette pal(n);
    pal.rainbow_join(j);
    paint_avoider_core(pal, j, n - j, p);
    pal.fill_rest();
    return std::move(pal).finish();
}

/// Rainbow join on J = {0..j-1}; r colors on the rest, the extra one on the first inner pair.
inline EdgeColoring join_constant(int n, int j, int r) {
    require(r >= 1 && r <= 2, "inner color count must be 1 or 2");
    require(pair_count(n - j) >= r, "inner part too small for the requested number of colors");
    Palette pal(n);
    pal.rainbow_join(j);
    if (r == 2) pal.paint(j, j + 1, pal.fresh());
    pal.fill_rest();
    return std::move(pal).finish();
}

inline EdgeColoring clique_plus_one(int n, int m) {
    require(m >= 0 && m < n, "clique must leave at least one vertex outside");
    Palette pal(n);
    pal.rainbow_clique(m);
    pal.fill_rest();
    return std::move(pal).finish();
}

inline Construction finish(EdgeColoring col, ConstructionCertificate cert) {
    cert.colors = col.num_colors();
    return Construction{std::move(col), std::move(cert)};
}

inline Construction avoider_construction(CertificateKind kind, int n, const ForestSpec& f, int j, int p, int branch) {
    auto cert = make_certificate(kind, n, f);
    cert.join_size = j;
    cert.palette_cap = p - 1;
    cert.branch = branch;
    return finish(join_avoider(n, j, p), std::move(cert));
}

inline Construction constant_construction(CertificateKind kind, int n, const ForestSpec& f, int j, int r, int branch = 0) {
    auto cert = make_certificate(kind, n, f);
    cert.join_size = j;
    cert.inner_colors = r;
    cert.branch = branch;
    return finish(join_constant(n, j, r), std::move(cert));
}

inline Construction clique_construction(int n, const ForestSpec& f, int m) {
    auto cert = make_certificate(CertificateKind::CliquePlusOne, n, f);
    cert.clique_size = m;
    return finish(clique_plus_one(n, m), std::move(cert));
}

inline void require_order(const ForestSpec& f, int n) {
    require(n >= f.vertex_count(), "n=" + std::to_string(n) + " is below the order of " + format_forest_spec(f));
}

} // namespace construct_detail

/// Extremal coloring for a star forest with largest star >= 2: the best of the
/// join branches i (rainbow K_{i-1} + complement, K_{1,p_i}-avoider inside)
/// and, for t >= 2, the matching-type branch (rainbow K_{t-2} + complement, r colors inside).
/// Ties go to the smallest join index.
inline Construction construct_star_forest(int n, const ForestSpec& spec) {
    using namespace construct_detail;
    ForestSpec f = canonical(spec);
    if (f.kind != ForestKind::StarForest) throw UnsupportedError("construct_star_forest needs an S(...) pattern");
    if (f.params[0] < 2) throw HypothesisError("star forest constructions need a star with at least 2 edges; use the matching construction");
    require_order(f, n);

    DerivedQuantities d;
    formula_detail::star_forest_expression(f.params, n, d);
    int branch = d.argmax.front();
    for (int b : d.argmax)
        if (b >= 1 && (branch == 0 || b < branch)) branch = b;

    if (branch >= 1) {
        int p = f.params[static_cast<std::size_t>(branch - 1)];
        return avoider_construction(CertificateKind::JoinPlusStarAvoider, n, f, branch - 1, p, branch);
    }
    const int t = static_cast<int>(f.params.size());
    return constant_construction(CertificateKind::MatchingExtremal, n, f, t - 2, static_cast<int>(*d.r), 0);
}

enum class LinearVariant { Auto, Clique, Join };

/// Linear forest lower-bound colorings: a rainbow clique plus one color, or a
/// rainbow K_s + complement with r colors inside. Auto takes the one with more colors (join on ties).
inline Construction construct_linear_forest(int n, const ForestSpec& spec, LinearVariant variant = LinearVariant::Auto) {
    using namespace construct_detail;
    ForestSpec f = canonical(spec);
    if (f.kind != ForestKind::LinearForest) throw UnsupportedError("construct_linear_forest needs a P(...) pattern");
    require_order(f, n);

    auto jp = formula_detail::linear_join_params(f.params);
    const auto m = formula_detail::linear_clique_size(f.params);
    const bool join_ok = jp.s >= 0 && pair_count(n - jp.s) >= jp.r;
    const bool clique_ok = m >= 0 && m < n;
    auto join_colors = formula_detail::linear_join_value(n, jp);
    auto clique_colors = formula_detail::choose2(m) + 1;

    bool use_join;
    switch (variant) {
    case LinearVariant::Join: use_join = true; break;
    case LinearVariant::Clique: use_join = false; break;
    default: use_join = join_ok && (!clique_ok || join_colors >= clique_colors); break;
    }
    if (use_join) {
        require(join_ok, "join variant is not available for " + format_forest_spec(f));
        return constant_construction(CertificateKind::JoinPlusRConstant, n, f, static_cast<int>(jp.s), static_cast<int>(jp.r));
    }
    require(clique_ok, "clique variant is not available for " + format_forest_spec(f));
    return clique_construction(n, f, static_cast<int>(m));
}

/// Double star S_{p,q}: for q < p a K_{1,p+1}-avoider on all of K_n; for q = p a
/// rainbow star at vertex 0 and a K_{1,p}-avoider on the other n-1 vertices.
inline Construction construct_double_star(int n, int p, int q) {
    using namespace construct_detail;
    require(p >= 2, "double star construction needs p >= 2");
    require(q >= 1 && q <= p, "double star needs 1 <= q <= p");
    require(n >= p + q + 2, "double star needs n >= p + q + 2");
    ForestSpec f{ForestKind::DoubleStar, {p, q}};
    if (q < p) return avoider_construction(CertificateKind::JoinPlusStarAvoider, n, f, 0, p + 1, 1);
    return avoider_construction(CertificateKind::StarPlusAvoider, n, f, 1, p, 1);
}

/// Spider with legs >= 2: rainbow K_{beta-1} + complement, r colors inside
/// (r = 2 iff exactly one leg has even length).
inline Construction construct_spider(int n, const SpiderSpec& sp) {
    using namespace construct_detail;
    const int beta = spider_beta(sp);
    const int r = even_leg_count(sp) == 1 ? 2 : 1;
    ForestSpec f = canonical(ForestSpec{ForestKind::Spider, sp.legs});
    require_order(f, n);
    return constant_construction(CertificateKind::SpiderJoin, n, f, beta - 1, r);
}

/// tK_2: the better of a rainbow K_{2t-3} plus one color and a rainbow K_{t-2} + complement plus one color.
inline Construction construct_matching(int n, int t) {
    using namespace construct_detail;
    require(t >= 2, "matching construction needs t >= 2");
    ForestSpec f{ForestKind::Matching, {t}};
    require_order(f, n);
    const auto clique = formula_detail::choose2(2 * t - 3) + 1;
    const auto join = formula_detail::matching_type_value(n, t, 1);
    if (clique > join) return clique_construction(n, f, 2 * t - 3);
    return constant_construction(CertificateKind::MatchingExtremal, n, f, t - 2, 1);
}

/// Picks the generator matching the pattern's family.
inline Construction construct_for(const ForestSpec& spec, int n, LinearVariant variant = LinearVariant::Auto) {
    using namespace construct_detail;
    ForestSpec f = canonical(spec);
    switch (f.kind) {
    case ForestKind::Matching: return construct_matching(n, f.params[0]);
    case ForestKind::StarForest:
        if (f.params[0] == 1) {
            auto c = construct_matching(n, static_cast<int>(f.params.size()));
            c.certificate.forest = format_forest_spec(f);
            return c;
        }
        return construct_star_forest(n, f);
    case ForestKind::LinearForest:
        if (std::all_of(f.params.begin(), f.params.end(), [](int x) { return x == 2; })) {
            auto c = construct_matching(n, static_cast<int>(f.params.size()));
            c.certificate.forest = format_forest_spec(f);
            return c;
        }
        return construct_linear_forest(n, f, variant);
    case ForestKind::DoubleStar:
        if (f.params[0] == 1) {
            auto c = construct_linear_forest(n, ForestSpec{ForestKind::LinearForest, {4}}, variant);
            c.certificate.forest = format_forest_spec(f);
            return c;
        }
        return construct_double_star(n, f.params[0], f.params[1]);
    case ForestKind::Spider: {
        SpiderSpec sp = SpiderSpec::from(f);
        if (sp.legs.size() >= 2 && sp.legs.front() >= 2) return construct_spider(n, sp);
        if (sp.legs.size() == 1) {
            auto c = construct_linear_forest(n, ForestSpec{ForestKind::LinearForest, {sp.legs[0] + 1}}, variant);
            c.certificate.forest = format_forest_spec(f);
            return c;
        }
        if (sp.legs.back() == 1) {
            auto c = construct_star_forest(n, ForestSpec{ForestKind::StarForest, {static_cast<int>(sp.legs.size())}});
            c.certificate.forest = format_forest_spec(f);
            return c;
        }
        throw UnsupportedError("no construction for spiders mixing legs of length 1 and >= 2");
    }
    case ForestKind::Omega2: break;
    }
    throw UnsupportedError("no construction for " + format_forest_spec(f));
}

} // namespace antiramsey

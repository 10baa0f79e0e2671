#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "forest_spec.hpp"
#include "matching.hpp"

namespace antiramsey {

enum class FormulaStatus { Exact, BoundsOnly, Asymptotic, Conditional, OutOfRange };

inline std::string_view status_name(FormulaStatus s) {
    switch (s) {
    case FormulaStatus::Exact: return "Exact";
    case FormulaStatus::BoundsOnly: return "BoundsOnly";
    case FormulaStatus::Asymptotic: return "Asymptotic";
    case FormulaStatus::Conditional: return "Conditional";
    case FormulaStatus::OutOfRange: return "OutOfRange";
    }
    return "?";
}

/// Quantities the closed forms are expressed in, echoed for reports.
struct DerivedQuantities {
    std::optional<std::int64_t> s;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> epsilon;
    std::optional<std::int64_t> beta;
    std::optional<std::int64_t> coefficient; // linear coefficient when only the asymptotic order is known
    std::vector<int> argmax;                 // star forests: maximizing branches, i >= 1 join branch i, 0 the matching-type branch
};

/// A value or a bound pair, tagged with how far it can be trusted.
///
/// Exact: lower == upper is the anti-Ramsey (or Turan) number.
/// Conditional: lower == upper holds once n exceeds an unspecified "sufficiently
///   large" threshold; the configured threshold has been met.
/// BoundsOnly: lower is certified by an explicit coloring; upper is the best
///   available bound (often only the trivial one).
/// Asymptotic: lower as for BoundsOnly; only the linear coefficient of the true
///   value is known (see derived.coefficient).
/// OutOfRange: nothing is asserted; lower and upper are empty.
struct FormulaResult {
    std::string family;
    std::int64_t n = 0;
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    FormulaStatus status = FormulaStatus::OutOfRange;
    std::string source;
    DerivedQuantities derived;
    std::string note;

    bool is_exact() const { return status == FormulaStatus::Exact; }
    std::int64_t value() const {
        if (!lower || !upper || *lower != *upper) throw RangeError("formula result for " + family + " has no single value");
        return *lower;
    }
};

/// Defaults for results that only hold for "n sufficiently large".
///
/// path_constant       the universal constant C in n >= 5k/4 + C for paths of length k
/// large_n_factor      other large-n families are trusted once n >= factor * v(F)^2
struct FormulaConfig {
    std::int64_t path_constant = 10;
    std::int64_t large_n_factor = 3;
};

namespace formula_detail {

using i64 = std::int64_t;

constexpr i64 choose2(i64 x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

inline i64 trivial_upper(i64 n) { return choose2(n) - 1; }

inline i64 large_n_threshold(const ForestSpec& f, const FormulaConfig& cfg) {
    i64 v = f.vertex_count();
    return cfg.large_n_factor * v * v;
}

inline FormulaResult make(const ForestSpec& f, i64 n) {
    FormulaResult r;
    r.family = format_forest_spec(f);
    r.n = n;
    return r;
}

inline FormulaResult exact(FormulaResult r, i64 v, std::string source) {
    r.lower = r.upper = v;
    r.status = FormulaStatus::Exact;
    r.source = std::move(source);
    return r;
}

inline FormulaResult bounds(FormulaResult r, i64 lo, i64 hi, std::string source) {
    r.lower = lo;
    r.upper = std::max(lo, hi);
    r.status = lo == hi ? FormulaStatus::Exact : FormulaStatus::BoundsOnly;
    r.source = std::move(source);
    return r;
}

/// Conditional value when the large-n threshold is met and no explicit coloring beats it.
inline FormulaResult conditional_or_bounds(FormulaResult r, i64 value, i64 certified_lower, bool threshold_met, std::string source) {
    if (threshold_met && certified_lower <= value) {
        r.lower = r.upper = value;
        r.status = FormulaStatus::Conditional;
        r.source = std::move(source);
        return r;
    }
    r.note = threshold_met ? "explicit coloring exceeds the large-n value at this n" : "below the configured large-n threshold";
    return bounds(std::move(r), certified_lower, trivial_upper(r.n), std::move(source));
}

/// ex(n, tK_2) for n >= 2t.
inline i64 ex_matching(i64 n, i64 t) {
    if (t <= 1) return 0;
    return std::max(choose2(2 * t - 1), choose2(t - 1) + (t - 1) * (n - t + 1));
}

/// Value of the (t-2)n - C(t-1,2) + r matching-type coloring: rainbow K_{t-2} joined to the rest, r colors inside.
inline i64 matching_type_value(i64 n, i64 t, i64 r) { return (t - 2) * n - choose2(t - 1) + r; }

/// Value of the join branch i for star size p: rainbow K_{i-1} + complement, star avoider inside.
inline i64 star_join_value(i64 n, i64 i, i64 p) { return (i - 1) * n - choose2(i) + ((p - 2) * (n - i + 1)) / 2 + 1; }

/// Clique-plus-one lower bound for linear forests given as path orders.
/// The rainbow clique has sum-2 vertices when every path has >= 3 vertices, one
/// fewer when a P_2 component is present (otherwise a P_2 fits on the residual color).
inline i64 linear_clique_size(const std::vector<int>& orders) {
    i64 sum = std::accumulate(orders.begin(), orders.end(), i64{0});
    bool has_p2 = std::find(orders.begin(), orders.end(), 2) != orders.end();
    return sum - (has_p2 ? 3 : 2);
}

inline i64 linear_clique_value(const std::vector<int>& orders) { return choose2(linear_clique_size(orders)) + 1; }

struct JoinParams {
    i64 s = 0;
    i64 r = 1;
    i64 epsilon = 1;
};

/// s = sum floor(p_i/2) - eps (eps = 1 if all orders odd, else 2); r = 2 iff exactly one order is even.
inline JoinParams linear_join_params(const std::vector<int>& orders) {
    i64 half = 0;
    int even = 0;
    for (int p : orders) {
        half += p / 2;
        if (p % 2 == 0) ++even;
    }
    JoinParams jp;
    jp.epsilon = even == 0 ? 1 : 2;
    jp.s = half - jp.epsilon;
    jp.r = even == 1 ? 2 : 1;
    return jp;
}

inline i64 linear_join_value(i64 n, const JoinParams& jp) { return jp.s * n - choose2(jp.s + 1) + jp.r; }

inline FormulaResult matching_result(FormulaResult r, i64 t, i64 n) {
    r.derived.s = t - 2;
    r.derived.r = 1;
    if (t == 1) return exact(std::move(r), 0, "trivial:single-edge");
    if (n >= 2 * t + 1) return exact(std::move(r), ex_matching(n, t - 1) + 1, "matching:ex(n,(t-1)K2)+1");
    // n == 2t
    if (t == 2) {
        r.status = FormulaStatus::OutOfRange;
        r.source = "matching:perfect";
        r.note = "K_4 carries 3 colors with no rainbow 2K_2 (three monochromatic perfect matchings); the ex+1 value does not apply";
        return r;
    }
    i64 extra = t <= 6 ? 1 : 2;
    return exact(std::move(r), ex_matching(n, t - 1) + extra, "matching:perfect");
}

inline FormulaResult single_star_result(FormulaResult r, i64 p, i64 n) {
    if (p == 1) return exact(std::move(r), 0, "trivial:single-edge");
    // Bounds for K_{1,p}: shift of the K_{1,p+1} statement, valid for n >= p + 1.
    const i64 m = n - p + 2;
    i64 lo = ((p - 2) * n) / 2 + n / m;
    i64 hi = ((p - 2) * n + (2 * n) / m) / 2;
    if (n >= 3 * p + 4) return exact(std::move(r), ((p - 2) * n) / 2 + 1, "star:jiang;montellano-ballesteros");
    return bounds(std::move(r), lo, hi, "star:jiang;montellano-ballesteros");
}

/// Max over the join branches 1..s and (t >= 2) the matching-type branch.
inline i64 star_forest_expression(const std::vector<int>& p, i64 n, DerivedQuantities& d) {
    const i64 t = static_cast<i64>(p.size());
    i64 s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] >= 2) s = static_cast<i64>(i) + 1;
    d.s = s;
    std::vector<std::pair<i64, int>> branches;
    for (i64 i = 1; i <= s; ++i) branches.emplace_back(star_join_value(n, i, p[static_cast<std::size_t>(i - 1)]), static_cast<int>(i));
    if (t >= 2) {
        i64 r = p[static_cast<std::size_t>(t - 2)] == 1 ? 1 : 2;
        d.r = r;
        branches.emplace_back(matching_type_value(n, t, r), 0);
    }
    i64 best = branches.front().first;
    for (const auto& b : branches) best = std::max(best, b.first);
    d.argmax.clear();
    for (const auto& b : branches)
        if (b.first == best) d.argmax.push_back(b.second);
    return best;
}

/// Forests whose components are P_2 and P_3 only: k copies of P_3, l copies of P_2.
inline FormulaResult small_components_result(FormulaResult r, const ForestSpec& f, i64 k, i64 l, i64 n, const FormulaConfig& cfg) {
    std::vector<int> stars;
    for (i64 i = 0; i < k; ++i) stars.push_back(2);
    for (i64 i = 0; i < l; ++i) stars.push_back(1);
    i64 value = star_forest_expression(stars, n, r.derived);

    std::vector<int> orders;
    for (int s : stars) orders.push_back(s + 1);
    i64 clique = orders.size() >= 2 ? linear_clique_value(orders) : 0;
    i64 certified = std::max(value, clique);

    if (l == 0 && k == 2 && n >= 6) return exact(std::move(r), std::max<i64>(n, 7), "2P3:bialostocki-gilboa-roditty;gorgol-gorlich");
    if (l == 0 && k == 3 && n >= 13) return exact(std::move(r), 2 * n - 2, "3P3:gorgol-gorlich");
    if (l == 0 && k == 1) return exact(std::move(r), 1, "trivial:P3");
    return conditional_or_bounds(std::move(r), value, certified, n >= large_n_threshold(f, cfg), "small-components:gilboa-roditty");
}

/// Single path with `order` vertices.
inline FormulaResult path_result(FormulaResult r, i64 order, i64 n, const FormulaConfig& cfg) {
    const i64 len = order - 1;
    if (len == 1) return exact(std::move(r), 0, "trivial:single-edge");
    if (len == 2) return exact(std::move(r), 1, "trivial:P3");
    const i64 h = len / 2;
    const i64 parity = len % 2;
    i64 value = (h - 1) * n - choose2(h) + 1 + parity;
    i64 certified;
    if (len == 3) {
        certified = 2; // two colors, every P_4 has three edges
    } else {
        SpiderSpec sp{{static_cast<int>(len / 2), static_cast<int>(len - len / 2)}};
        i64 beta = spider_beta(sp);
        i64 rr = even_leg_count(sp) == 1 ? 2 : 1;
        r.derived.beta = beta;
        r.derived.r = rr;
        certified = (beta - 1) * n - choose2(beta) + rr;
    }
    bool met = 4 * n >= 5 * len + 4 * cfg.path_constant;
    return conditional_or_bounds(std::move(r), value, certified, met, "path:simonovits-sos");
}

inline FormulaResult linear_forest_result(FormulaResult r, const ForestSpec& f, i64 n, const FormulaConfig& cfg) {
    const auto& p = f.params; // descending
    const i64 k = static_cast<i64>(p.size());
    if (std::all_of(p.begin(), p.end(), [](int x) { return x == 2; })) return matching_result(std::move(r), k, n);
    if (k == 1) return path_result(std::move(r), p[0], n, cfg);
    if (std::all_of(p.begin(), p.end(), [](int x) { return x <= 3; })) {
        i64 k3 = std::count(p.begin(), p.end(), 3);
        return small_components_result(std::move(r), f, k3, k - k3, n, cfg);
    }

    JoinParams jp = linear_join_params(p);
    r.derived.s = jp.s;
    r.derived.r = jp.r;
    r.derived.epsilon = jp.epsilon;
    const i64 join = linear_join_value(n, jp);
    const i64 clique = linear_clique_value(p);
    const i64 certified = std::max(join, clique);
    const bool met = n >= large_n_threshold(f, cfg);

    if (p == std::vector<int>{4, 4} && n >= 8) return exact(std::move(r), std::max<i64>(2 * n - 2, 16), "2P4:exact");

    // One long path plus copies of P_2, or plus copies of P_3.
    const i64 k2 = std::count(p.begin(), p.end(), 2);
    const i64 k3 = std::count(p.begin(), p.end(), 3);
    if (p[0] == 4 && k2 == k - 1) {
        i64 t = k2;
        return conditional_or_bounds(std::move(r), t * n - choose2(t + 1) + 1, certified, met, "small-components:gilboa-roditty");
    }
    if (p[0] >= 4 && k3 == k - 1) {
        i64 len = p[0] - 1, t = k3;
        i64 m = t + len / 2 - 1;
        return conditional_or_bounds(std::move(r), m * n - choose2(m + 1) + 1 + len % 2, certified, met, "small-components:gilboa-roditty");
    }

    const bool all_odd = std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; });
    const bool all_even = std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
    if (all_odd) return conditional_or_bounds(std::move(r), join, certified, met, "linear-forest:odd-paths");
    if (all_even) {
        if (met && clique <= join) {
            r.note = "all paths even: true value is the lower bound or one more";
            return bounds(std::move(r), join, join + 1, "linear-forest:even-paths");
        }
        return bounds(std::move(r), certified, trivial_upper(n), "linear-forest:even-paths");
    }
    r.derived.coefficient = jp.s; // sum floor(p_i/2) - 2
    r = bounds(std::move(r), certified, trivial_upper(n), "linear-forest:asymptotic");
    r.status = FormulaStatus::Asymptotic;
    r.note = "value is coefficient*n + O(1); the constant is not known";
    return r;
}

inline FormulaResult star_forest_result(FormulaResult r, const ForestSpec& f, i64 n, const FormulaConfig& cfg) {
    const auto& p = f.params; // descending
    const i64 t = static_cast<i64>(p.size());
    if (p[0] == 1) return matching_result(std::move(r), t, n);
    if (t == 1) return single_star_result(std::move(r), p[0], n);
    if (p[0] == 2) {
        i64 k = std::count(p.begin(), p.end(), 2);
        return small_components_result(std::move(r), f, k, t - k, n, cfg);
    }
    i64 value = star_forest_expression(p, n, r.derived);
    i64 threshold = 3 * t * t * (p[0] + 1) * (p[0] + 1);
    if (n >= threshold) return exact(std::move(r), value, "star-forest:join-avoider");
    r.note = "below n >= 3t^2(p1+1)^2";
    return bounds(std::move(r), value, trivial_upper(n), "star-forest:join-avoider");
}

inline FormulaResult double_star_result(FormulaResult r, const ForestSpec& f, i64 n, const FormulaConfig& cfg) {
    const i64 p = f.params[0], q = f.params[1];
    if (p == 1) return path_result(std::move(r), 4, n, cfg);
    i64 value = q < p ? ((p - 1) * n) / 2 + 1 : (p * (n - 1)) / 2 + 1;
    if (n >= 6 * (p * p + 2 * p)) return exact(std::move(r), value, "double-star:exact");
    r.note = "below n >= 6(p^2+2p)";
    return bounds(std::move(r), value, trivial_upper(n), "double-star:exact");
}

inline FormulaResult spider_result(FormulaResult r, const ForestSpec& f, i64 n, const FormulaConfig& cfg) {
    SpiderSpec sp = SpiderSpec::from(f);
    if (sp.legs.size() == 1) return path_result(std::move(r), sp.legs[0] + 1, n, cfg);
    if (std::all_of(sp.legs.begin(), sp.legs.end(), [](int a) { return a == 1; }))
        return single_star_result(std::move(r), static_cast<i64>(sp.legs.size()), n);
    if (sp.legs.front() < 2) throw UnsupportedError("spiders mixing legs of length 1 and >= 2 are not covered");
    if (sp.legs.size() == 2) return path_result(std::move(r), sp.vertex_count(), n, cfg);

    i64 beta = spider_beta(sp);
    i64 rr = even_leg_count(sp) == 1 ? 2 : 1;
    r.derived.beta = beta;
    r.derived.r = rr;
    i64 lower = (beta - 1) * n - choose2(beta) + rr;
    r.note = "conjectured to be the exact value for large n";
    return bounds(std::move(r), lower, trivial_upper(n), "spider:join-lower");
}

} // namespace formula_detail

/// Anti-Ramsey number ar(K_n, F) from the closed forms, with validity status.
inline FormulaResult ar_formula(const ForestSpec& spec, std::int64_t n, const FormulaConfig& cfg = {}) {
    using namespace formula_detail;
    ForestSpec f = canonical(spec);
    if (n < f.vertex_count())
        throw RangeError("n=" + std::to_string(n) + " is below the pattern order " + std::to_string(f.vertex_count()) + " of " + format_forest_spec(f));
    FormulaResult r = make(f, n);
    switch (f.kind) {
    case ForestKind::Omega2: return exact(std::move(r), std::max<i64>(2 * n - 2, 11), "omega2:jin-li");
    case ForestKind::Matching: return matching_result(std::move(r), f.params[0], n);
    case ForestKind::StarForest: return star_forest_result(std::move(r), f, n, cfg);
    case ForestKind::LinearForest: return linear_forest_result(std::move(r), f, n, cfg);
    case ForestKind::DoubleStar: return double_star_result(std::move(r), f, n, cfg);
    case ForestKind::Spider: return spider_result(std::move(r), f, n, cfg);
    }
    throw UnsupportedError("unsupported family");
}

/// Turan number ex(n, F) for matchings, star forests and linear forests.
inline FormulaResult ex_formula(const ForestSpec& spec, std::int64_t n, const FormulaConfig& cfg = {}) {
    using namespace formula_detail;
    ForestSpec f = canonical(spec);
    if (n < f.vertex_count())
        throw RangeError("n=" + std::to_string(n) + " is below the pattern order " + std::to_string(f.vertex_count()) + " of " + format_forest_spec(f));
    FormulaResult r = make(f, n);
    const auto& p = f.params;
    const bool met = n >= large_n_threshold(f, cfg);

    auto matching = [&](i64 t) { return exact(std::move(r), ex_matching(n, t), "matching:erdos-gallai"); };
    auto gated = [&](i64 value, std::string source) {
        if (met) {
            r.lower = r.upper = value;
            r.status = FormulaStatus::Conditional;
            r.source = std::move(source);
        } else {
            r.status = FormulaStatus::OutOfRange;
            r.source = std::move(source);
            r.note = "below the configured large-n threshold";
        }
        return r;
    };

    switch (f.kind) {
    case ForestKind::Matching: return matching(p[0]);
    case ForestKind::StarForest: {
        if (p[0] == 1) return matching(static_cast<i64>(p.size()));
        i64 best = std::numeric_limits<i64>::min();
        for (std::size_t idx = 0; idx < p.size(); ++idx) {
            i64 i = static_cast<i64>(idx) + 1;
            i64 term = (i - 1) * n - choose2(i) + ((p[idx] - 1) * (n - i + 1)) / 2;
            if (term > best) {
                best = term;
                r.derived.argmax = {static_cast<int>(i)};
            } else if (term == best) {
                r.derived.argmax.push_back(static_cast<int>(i));
            }
        }
        return gated(best, "star-forest:lidicky-liu-palmer");
    }
    case ForestKind::LinearForest: {
        if (std::all_of(p.begin(), p.end(), [](int x) { return x == 2; })) return matching(static_cast<i64>(p.size()));
        if (p.size() < 2) throw UnsupportedError("ex for a single path is not covered");
        if (std::all_of(p.begin(), p.end(), [](int x) { return x == 3; }))
            throw UnsupportedError("ex for kP_3 (k >= 2) is not covered: the linear-forest Turan formula needs some path order != 3");
        i64 half = 0;
        bool all_odd = true;
        for (int x : p) {
            half += x / 2;
            all_odd = all_odd && (x % 2 == 1);
        }
        r.derived.s = half;
        return gated((half - 1) * n - choose2(half) + (all_odd ? 1 : 0), "linear-forest:lidicky-liu-palmer");
    }
    default: throw UnsupportedError("ex_formula supports matchings, star forests and linear forests");
    }
}

} // namespace antiramsey

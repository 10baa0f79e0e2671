#include <gtest/gtest.h>

#include "antiramsey/constructions.hpp"
#include "antiramsey/oracle.hpp"
#include "oracles.hpp"

using namespace antiramsey;

namespace {

ForestSpec F(const char* s) { return parse_forest_spec(s); }

void expect_witness(const SearchOutcome& o, const ForestSpec& f, int n) {
    if (o.value == 0) return;
    ASSERT_TRUE(o.witness.has_value());
    EXPECT_EQ(o.witness->order(), n);
    EXPECT_EQ(o.witness->num_colors(), o.value);
    EXPECT_TRUE(verify_no_rainbow(*o.witness, f));
}

// ar(K_n, F) by trying every coloring with at most k colors (n <= 5)
int brute_ar(int n, const ForestSpec& f) {
    Graph g = to_graph(f);
    const int m = n * (n - 1) / 2;
    std::vector<Color> raw(m, 0);
    int best = 0;
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == m) {
            if (used > best && !oracle::brute_rainbow(EdgeColoring(n, raw), g)) best = used;
            return;
        }
        for (int c = 0; c <= used; ++c) {
            raw[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace

TEST(Oracle, KnownValues) {
    auto a = ar_exact(5, F("M(2)"));
    EXPECT_EQ(a.value, 1);
    EXPECT_EQ(a.status, SearchStatus::Exact);
    auto b = ar_exact(4, F("M(2)"));
    EXPECT_EQ(b.value, 3);
    EXPECT_EQ(b.status, SearchStatus::Exact);
    expect_witness(b, F("M(2)"), 4);
    EXPECT_EQ(ar_exact(4, F("P(3)")).value, 1);
    EXPECT_EQ(ar_exact(5, F("M(1)")).value, 0);
}

TEST(Oracle, AgreesWithBruteForce) {
    for (const char* s : {"M(2)", "P(3)", "P(4)", "S(3)", "S(2,1)", "P(3,2)"})
        for (int n = F(s).vertex_count(); n <= 5; ++n) {
            auto o = ar_exact(n, F(s));
            EXPECT_EQ(o.status, SearchStatus::Exact);
            EXPECT_EQ(o.value, brute_ar(n, F(s))) << s << " n=" << n;
            expect_witness(o, F(s), n);
        }
}

TEST(Oracle, WithoutSymmetryBreakingSameValue) {
    SearchOptions plain;
    plain.vertex_symmetry = false;
    for (const char* s : {"M(2)", "P(4)", "S(3)", "P(3,3)", "S(2,2)"})
        for (int n = F(s).vertex_count(); n <= 6; ++n) EXPECT_EQ(ar_exact(n, F(s)).value, ar_exact(n, F(s), plain).value) << s << " " << n;
}

TEST(Oracle, DominatesConstructions) {
    for (const char* s : {"M(2)", "P(4)", "S(3)", "S(2,1)", "S(2,2)", "P(3,2)", "S(3,1)", "DS(2,1)", "P(5)", "S(4)"})
        for (int n = F(s).vertex_count(); n <= 5; ++n) {
            Construction c;
            try {
                c = construct_for(F(s), n);
            } catch (const Error&) {
                continue;
            }
            EXPECT_LE(c.coloring.num_colors(), ar_exact(n, F(s)).value) << s << " n=" << n;
        }
}

TEST(Oracle, MonotoneInN) {
    EXPECT_LE(ar_exact(4, F("P(3)")).value, ar_exact(5, F("P(3)")).value);
    for (const char* s : {"M(2)", "P(3)", "P(4)"})
        for (int n = 5; n <= 6; ++n) EXPECT_LE(ar_exact(n, F(s)).value, ar_exact(n + 1, F(s)).value) << s;
}

TEST(Oracle, NotMonotoneAtTheSmallestHost) {
    // K_4 splits into three perfect matchings; one color each blocks rainbow 2K_2 and P_4
    EXPECT_EQ(ar_exact(4, F("M(2)")).value, 3);
    EXPECT_EQ(ar_exact(5, F("M(2)")).value, 1);
    EXPECT_EQ(ar_exact(4, F("P(4)")).value, 3);
    EXPECT_EQ(ar_exact(5, F("P(4)")).value, 2);
}

TEST(Oracle, ThreadCountDoesNotChangeValue) {
    for (const char* s : {"P(4)", "M(3)", "S(2,2)"}) {
        int n = std::max(6, F(s).vertex_count());
        auto one = ar_exact(n, F(s));
        for (int threads : {2, 4}) {
            SearchOptions opt;
            opt.threads = threads;
            auto many = ar_exact(n, F(s), opt);
            EXPECT_EQ(many.value, one.value) << s;
            EXPECT_EQ(many.status, SearchStatus::Exact);
            expect_witness(many, F(s), n);
        }
    }
}

TEST(Oracle, BudgetAndNodeLimit) {
    SearchOptions opt;
    opt.max_nodes = 100;
    auto o = ar_exact(7, F("P(3,3)"), opt);
    EXPECT_EQ(o.status, SearchStatus::LowerBoundOnly);
    expect_witness(o, F("P(3,3)"), 7);
    SearchOptions quick;
    quick.budget = std::chrono::milliseconds(0);
    EXPECT_NE(ar_exact(7, F("P(4,3)"), quick).status, SearchStatus::Exact);
}

TEST(Oracle, Rejects) {
    EXPECT_THROW(ar_exact(3, F("M(2)")), RangeError);
    EXPECT_THROW(ar_exact(13, F("M(2)")), RangeError);
    EXPECT_THROW(ar_exact(6, F("OMEGA2")), UnsupportedError);
    EXPECT_THROW(max_colors_with_caps(4, {1, 1, 1}), RangeError);
    EXPECT_THROW(max_colors_with_caps(4, {2, 1, 1, 1}), RangeError);
    EXPECT_THROW(max_colors_with_caps(4, {0, 1, 1, 1}), RangeError);
    EXPECT_THROW(max_colors_with_caps(4, {1, 1, 1, 4}), RangeError);
}

TEST(Caps, KnownValues) {
    auto a = max_colors_with_caps(6, std::vector<int>(6, 2));
    EXPECT_EQ(a.value, 4);
    EXPECT_EQ(a.status, SearchStatus::Exact);
    EXPECT_EQ(max_colors_with_caps(4, std::vector<int>(4, 1)).value, 1);
    EXPECT_EQ(max_colors_with_caps(6, std::vector<int>(6, 5)).value, 15);
    auto b = max_colors_with_caps(9, std::vector<int>(9, 3));
    EXPECT_EQ(b.status, SearchStatus::Exact);
    EXPECT_LE(b.value, lemma2_bound(std::vector<int>(9, 3)));
}

TEST(Caps, WitnessRespectsCaps) {
    for (auto caps : std::vector<std::vector<int>>{{1, 1, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2, 2}, {1, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 3, 3, 3}}) {
        const int n = static_cast<int>(caps.size());
        auto o = max_colors_with_caps(n, caps);
        ASSERT_TRUE(o.witness.has_value());
        EXPECT_EQ(o.witness->num_colors(), o.value);
        for (int v = 0; v < n; ++v) EXPECT_LE(o.witness->color_degree(v), caps[v]);
        if (3 * caps.back() <= n) {
            EXPECT_LE(o.value, lemma2_bound(caps));
        }
    }
}

TEST(Caps, AgreesWithBruteForceOnTinyInstances) {
    for (auto caps : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 2, 2, 2}, {2, 2, 2, 2, 2}, {1, 1, 2, 3, 3}}) {
        const int n = static_cast<int>(caps.size());
        const int m = n * (n - 1) / 2;
        std::vector<Color> raw(m, 0);
        int best = 0;
        auto rec = [&](auto&& self, int i, int used) -> void {
            if (i == m) {
                EdgeColoring col(n, raw);
                for (int v = 0; v < n; ++v)
                    if (oracle::brute_color_degree(col, v) > caps[v]) return;
                best = std::max(best, used);
                return;
            }
            for (int c = 0; c <= used; ++c) {
                raw[i] = c;
                self(self, i + 1, std::max(used, c + 1));
            }
        };
        rec(rec, 0, 0);
        EXPECT_EQ(max_colors_with_caps(n, caps).value, best);
    }
}

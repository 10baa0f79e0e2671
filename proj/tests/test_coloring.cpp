#include <gtest/gtest.h>

#include <random>

#include "antiramsey/coloring.hpp"
#include "oracles.hpp"

using namespace antiramsey;

TEST(EdgeColoring, Validation) {
    EXPECT_THROW(EdgeColoring(1, {}), RangeError);
    EXPECT_THROW(EdgeColoring(3, {0, 1}), RangeError);
    EXPECT_THROW(EdgeColoring(3, {0, 2, 2}), RangeError); // id 1 missing
    EXPECT_THROW(EdgeColoring(3, {0, -1, 0}), RangeError);
    EdgeColoring ok(3, {1, 0, 1});
    EXPECT_EQ(ok.num_colors(), 2);
    EXPECT_EQ(ok.color(2, 0), 0);
}

TEST(EdgeColoring, BasicShapes) {
    auto mono = EdgeColoring::monochromatic(6);
    auto rainbow = EdgeColoring::rainbow(6);
    EXPECT_EQ(mono.num_colors(), 1);
    EXPECT_EQ(rainbow.num_colors(), 15);
    EXPECT_EQ(mono.max_color_degree(), 1);
    EXPECT_EQ(rainbow.max_color_degree(), 5);
}

TEST(EdgeColoring, ColorDegreeMatchesDefinition) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 8;
        auto col = oracle::random_coloring(n, 1 + trial % 10, rng);
        for (int v = 0; v < n; ++v) EXPECT_EQ(col.color_degree(v), oracle::brute_color_degree(col, v));
    }
    EXPECT_THROW(EdgeColoring::rainbow(3).color_degree(3), RangeError);
}

TEST(EdgeColoring, ClassesPartitionEdges) {
    std::mt19937 rng(6);
    auto col = oracle::random_coloring(7, 5, rng);
    auto classes = col.color_classes();
    std::size_t total = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        EXPECT_FALSE(classes[c].empty());
        for (const auto& e : classes[c]) EXPECT_EQ(col.color(e), static_cast<Color>(c));
        total += classes[c].size();
    }
    EXPECT_EQ(total, 21u);
}

TEST(ColorProfile, StaredColors) {
    // K_4: star at 0 in color 0, edge {1,2} color 1, the rest color 2
    auto col = EdgeColoring::from_function(4, [](Vertex u, Vertex v) -> Color {
        if (u == 0) return 0;
        if (u == 1 && v == 2) return 1;
        return 2;
    });
    auto p0 = color_profile(col, 0);
    EXPECT_EQ(p0.palette, (std::vector<Color>{0}));
    EXPECT_EQ(p0.stared, (std::vector<Color>{0}));
    auto p1 = color_profile(col, 1);
    EXPECT_EQ(p1.palette.size(), 3u);
    EXPECT_EQ(p1.stared, (std::vector<Color>{1})); // single-edge class
    auto p3 = color_profile(col, 3); // class 2 is {1,3},{2,3}
    EXPECT_EQ(p3.stared, (std::vector<Color>{2}));
    auto p2 = color_profile(col, 2);
    EXPECT_EQ(p2.stared, (std::vector<Color>{1}));
}

TEST(RepresentingSubgraph, OneEdgePerColor) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto col = oracle::random_coloring(7, 2 + trial % 12, rng);
        Graph g = representing_subgraph(col);
        EXPECT_EQ(g.size(), col.num_colors());
        std::vector<int> hits(static_cast<std::size_t>(col.num_colors()), 0);
        for (const auto& e : g.edges()) ++hits[col.color(e)];
        for (int h : hits) EXPECT_EQ(h, 1);
    }
}

TEST(RepresentingSubgraph, ForcedEdges) {
    auto col = EdgeColoring::rainbow(5);
    std::vector<Edge> forced{{3, 4}};
    EXPECT_TRUE(representing_subgraph(col, forced).has_edge(3, 4));
    auto mono = EdgeColoring::monochromatic(5);
    std::vector<Edge> clash{{0, 1}, {2, 3}};
    EXPECT_THROW(representing_subgraph(mono, clash), MismatchError);
    std::vector<Edge> one{{2, 3}};
    Graph g = representing_subgraph(mono, one);
    EXPECT_EQ(g.size(), 1);
    EXPECT_TRUE(g.has_edge(2, 3));
}

TEST(CapBound, BoundValuesAndHypothesis) {
    std::vector<int> twos(6, 2), threes(9, 3);
    EXPECT_EQ(lemma2_bound(twos), 4);
    EXPECT_EQ(lemma2_bound(threes), 10);
    std::vector<int> too_big(6, 3);
    EXPECT_THROW(lemma2_bound(too_big), HypothesisError);
    std::vector<int> unsorted{2, 1, 1, 1, 1, 1};
    EXPECT_THROW(lemma2_bound(unsorted), RangeError);
    std::vector<int> zero{0, 1, 1};
    EXPECT_THROW(lemma2_bound(zero), RangeError);
}

TEST(CapBound, RandomColoringsNeverBeatTheBound) {
    // caps taken from the coloring itself; whenever the hypothesis holds the bound must too
    std::mt19937 rng(12);
    int checked = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        int n = 6 + trial % 7;
        auto col = oracle::random_coloring(n, 2 + trial % 4, rng);
        std::vector<int> caps;
        for (int v = 0; v < n; ++v) caps.push_back(col.color_degree(v));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int a, int b) { return caps[a] < caps[b]; });
        std::vector<int> sorted_caps;
        for (int v : perm) sorted_caps.push_back(caps[v]);
        if (3 * sorted_caps.back() > n) continue;
        auto relabeled = EdgeColoring::from_function(n, [&](Vertex u, Vertex v) { return col.color(perm[u], perm[v]); });
        auto check = lemma2_check(relabeled, sorted_caps);
        EXPECT_TRUE(check.caps_hold);
        EXPECT_TRUE(check.within_bound) << check.colors << " > " << check.bound;
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

TEST(ColoringFile, RoundTripIsBitExact) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto col = oracle::random_coloring(2 + trial % 9, 1 + trial % 7, rng);
        std::string text = to_coloring_text(col);
        auto back = parse_coloring(text);
        EXPECT_EQ(back, col);
        EXPECT_EQ(to_coloring_text(back), text);
    }
    EXPECT_EQ(to_coloring_text(EdgeColoring(3, {0, 1, 0})), "antiramsey-coloring v1\nn 3\n0 1 0\n0 2 1\n1 2 0\n");
}

TEST(ColoringFile, ReaderCanonicalizesIds) {
    auto col = parse_coloring("antiramsey-coloring v1\nn 3\n0 1 7\n0 2 3\n1 2 7\n");
    EXPECT_EQ(col, EdgeColoring(3, {0, 1, 0}));
}

TEST(ColoringFile, RejectsMalformed) {
    const std::string head = "antiramsey-coloring v1\nn 3\n";
    for (const std::string& bad : {std::string(""), std::string("n 3\n0 1 0\n"), head + "0 1 0\n0 2 0\n",
                                   head + "0 2 0\n0 1 0\n1 2 0\n", head + "0 1 0\n0 2 x\n1 2 0\n",
                                   head + "0 1 0\n0 2 0\n1 2 -1\n", head + "0 1 0\n0 2 0\n1 2 0\n0 1 0\n",
                                   std::string("antiramsey-coloring v1\nn 1\n")})
        EXPECT_THROW(parse_coloring(bad), ParseError) << bad;
}

#include <gtest/gtest.h>

#include <random>

#include "antiramsey/forest_spec.hpp"

using namespace antiramsey;

TEST(ForestSpec, ParsesEveryFamily) {
    EXPECT_EQ(parse_forest_spec("S(3,1)"), (ForestSpec{ForestKind::StarForest, {3, 1}}));
    EXPECT_EQ(parse_forest_spec(" p( 4 , 4 ) "), (ForestSpec{ForestKind::LinearForest, {4, 4}}));
    EXPECT_EQ(parse_forest_spec("M(2)"), (ForestSpec{ForestKind::Matching, {2}}));
    EXPECT_EQ(parse_forest_spec("DS(2,1)"), (ForestSpec{ForestKind::DoubleStar, {2, 1}}));
    EXPECT_EQ(parse_forest_spec("SP(3,2,2)"), (ForestSpec{ForestKind::Spider, {2, 2, 3}}));
    EXPECT_EQ(parse_forest_spec("omega2").kind, ForestKind::Omega2);
}

TEST(ForestSpec, CanonicalOrder) {
    EXPECT_EQ(parse_forest_spec("S(1,3,2)").params, (std::vector<int>{3, 2, 1}));
    EXPECT_EQ(parse_forest_spec("P(2,5,3)").params, (std::vector<int>{5, 3, 2}));
    EXPECT_EQ(format_forest_spec(parse_forest_spec("SP(5,2,3)")), "SP(2,3,5)");
}

TEST(ForestSpec, RejectsInvalid) {
    for (const char* bad : {"S()", "S(0)", "S(-1)", "P(1)", "M(1,2)", "M(0)", "DS(1,2)", "DS(3)", "SP()", "Q(3)", "S(3", "S(a)",
                            "S(3,,1)", "OMEGA2(1)", "S(1234567)", ""})
        EXPECT_THROW(parse_forest_spec(bad), ParseError) << bad;
}

TEST(ForestSpec, FormatParseRoundTrip) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(1, 4), val(2, 9), fam(0, 4);
    for (int trial = 0; trial < 500; ++trial) {
        ForestSpec f;
        int k = len(rng);
        for (int i = 0; i < k; ++i) f.params.push_back(val(rng));
        switch (fam(rng)) {
        case 0: f.kind = ForestKind::StarForest; break;
        case 1: f.kind = ForestKind::LinearForest; break;
        case 2: f.kind = ForestKind::Matching; f.params.resize(1); break;
        case 3:
            f.kind = ForestKind::DoubleStar;
            f.params = {val(rng), val(rng)};
            break;
        default: f.kind = ForestKind::Spider; break;
        }
        if (f.kind == ForestKind::DoubleStar && f.params[1] > f.params[0]) std::swap(f.params[0], f.params[1]);
        ForestSpec c = canonical(f);
        EXPECT_EQ(parse_forest_spec(format_forest_spec(c)), c);
        EXPECT_EQ(canonical(c), c);
    }
}

TEST(ForestSpec, OrderAndSizeMatchRealization) {
    for (const char* text : {"S(3,1)", "S(2,2)", "P(4,4)", "P(3,2)", "M(3)", "DS(2,1)", "DS(2,2)", "SP(2,3,3)", "SP(1,1,1)"}) {
        ForestSpec f = parse_forest_spec(text);
        Graph g = to_graph(f);
        EXPECT_EQ(g.order(), f.vertex_count()) << text;
        EXPECT_EQ(g.size(), f.edge_count()) << text;
        EXPECT_TRUE(g.is_forest()) << text;
        EXPECT_EQ(static_cast<int>(g.components().size()), g.order() - g.size()) << text;
    }
}

TEST(ForestSpec, Shapes) {
    Graph ds = to_graph(parse_forest_spec("DS(2,1)"));
    EXPECT_EQ(ds.degree(0), 3);
    EXPECT_EQ(ds.degree(1), 2);
    Graph sp = to_graph(SpiderSpec{{2, 3, 3}});
    EXPECT_EQ(sp.degree(0), 3);
    EXPECT_EQ(sp.max_degree(), 3);
    EXPECT_EQ(to_graph(parse_forest_spec("S(3,1)")).max_degree(), 3);
    EXPECT_THROW(to_graph(parse_forest_spec("OMEGA2")), UnsupportedError);
    EXPECT_FALSE(parse_forest_spec("OMEGA2").is_forest());
}

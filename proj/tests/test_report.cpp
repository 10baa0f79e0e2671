#include <gtest/gtest.h>

#include "antiramsey/report.hpp"

using namespace antiramsey;

namespace {

std::vector<ForestSpec> fam(std::initializer_list<const char*> names) {
    std::vector<ForestSpec> out;
    for (const char* s : names) out.push_back(parse_forest_spec(s));
    return out;
}

} // namespace

TEST(Verify, TwoP4BothModes) {
    VerifyOptions opt;
    opt.mode = VerifyMode::Both;
    auto rep = run_verify(fam({"P(4,4)"}), 8, 16, opt);
    ASSERT_EQ(rep.rows.size(), 9u);
    for (const auto& r : rep.rows) {
        EXPECT_EQ(r.status, RowStatus::Pass) << r.note;
        EXPECT_EQ(r.construction_colors, std::max(2 * r.n - 2, 16));
        EXPECT_TRUE(r.certificate_ok);
        ASSERT_TRUE(r.detector_ok.has_value());
        EXPECT_TRUE(*r.detector_ok);
    }
    EXPECT_EQ(exit_code(rep), 0);
}

TEST(Verify, DoubleStarSweep) {
    auto rep = run_verify(fam({"DS(2,1)"}), 48, 60);
    for (const auto& r : rep.rows) {
        EXPECT_EQ(r.construction_colors, r.n / 2 + 1);
        EXPECT_EQ(r.status, RowStatus::Pass);
    }
}

TEST(Verify, StarForestInstance) {
    auto rep = run_verify(fam({"S(3,1)"}), 192, 192);
    ASSERT_EQ(rep.rows.size(), 1u);
    EXPECT_EQ(rep.rows[0].construction_colors, 97);
    EXPECT_EQ(rep.rows[0].status, RowStatus::Pass);
}

TEST(Verify, OracleRowsAndOrdering) {
    VerifyOptions opt;
    opt.mode = VerifyMode::Both;
    opt.oracle = true;
    opt.threads = 3;
    auto rep = run_verify(fam({"P(3,2)", "M(2)", "S(2,1)"}), 5, 6, opt);
    ASSERT_EQ(rep.rows.size(), 6u);
    EXPECT_EQ(rep.rows.front().family, "M(2)");
    EXPECT_EQ(rep.rows.back().family, "S(2,1)");
    for (const auto& r : rep.rows) {
        ASSERT_TRUE(r.oracle.has_value());
        EXPECT_EQ(r.oracle->status, SearchStatus::Exact);
        EXPECT_GE(r.oracle->value, r.construction_colors);
        EXPECT_EQ(r.status, RowStatus::Pass) << r.family << " " << r.n << " " << r.note;
    }
}

TEST(Verify, TimeoutRowsGiveExitThree) {
    VerifyOptions opt;
    opt.oracle = true;
    opt.search.budget = std::chrono::milliseconds(0);
    auto rep = run_verify(fam({"P(4,3)"}), 8, 8, opt);
    EXPECT_EQ(rep.rows[0].status, RowStatus::Timeout);
    EXPECT_EQ(exit_code(rep), 3);
}

TEST(Verify, FailRowsGiveExitOne) {
    auto rep = run_verify(fam({"P(4,4)"}), 8, 8);
    rep.rows[0].status = RowStatus::Fail;
    EXPECT_EQ(exit_code(rep), 1);
}

TEST(Verify, RejectsBadInvocations) {
    VerifyOptions ex;
    ex.mode = VerifyMode::Exhaustive;
    EXPECT_THROW(run_verify(fam({"P(4,4)"}), 8, 26, ex), RangeError);
    EXPECT_THROW(run_verify(fam({"P(4,4)"}), 7, 9), RangeError);
    EXPECT_THROW(run_verify(fam({"P(4,4)"}), 10, 9), RangeError);
    EXPECT_THROW(run_verify({}, 8, 9), RangeError);
    EXPECT_THROW(parse_verify_mode("fast"), ParseError);
}

TEST(Verify, DeterministicReportsAreByteIdentical) {
    VerifyOptions one;
    one.deterministic = true;
    one.mode = VerifyMode::Both;
    VerifyOptions many = one;
    many.threads = 4;
    auto a = run_verify(fam({"P(4,4)", "S(3,1)", "SP(2,3,3)"}), 10, 14, one);
    auto b = run_verify(fam({"P(4,4)", "S(3,1)", "SP(2,3,3)"}), 10, 14, many);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(to_csv(a), to_csv(b));
    EXPECT_FALSE(to_json(a)["header"].contains("elapsed_ms"));
}

TEST(Verify, CsvColumns) {
    auto rep = run_verify(fam({"P(4,4)"}), 8, 9);
    std::string csv = to_csv(rep);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), std::string(kVerifyCsvHeader));
    EXPECT_NE(csv.find("\"P(4,4)\",8,16,16,Exact,16,true,,,,PASS"), std::string::npos) << csv;
}

TEST(SpiderScan, BetaPairEqualityCaseOnSmallRange) {
    auto rep = run_spider_scan(3, 3, 1, true);
    EXPECT_EQ(rep.spider_rows.size(), 7u);
    for (const auto& r : rep.spider_rows) {
        EXPECT_TRUE(r.observation_ok);
        EXPECT_EQ(r.status, RowStatus::Pass);
    }
    auto find = [&](std::vector<int> legs) {
        for (const auto& r : rep.spider_rows)
            if (r.legs == legs) return r;
        ADD_FAILURE() << "missing row";
        return SpiderRow{};
    };
    auto eq = find({2, 3, 3});
    EXPECT_EQ(eq.beta_pair, eq.beta);
    EXPECT_EQ(eq.even_legs, 1);
    auto strict = find({2, 2, 2});
    EXPECT_LT(strict.beta_pair, strict.beta);
    EXPECT_EQ(exit_code(rep), 0);
    EXPECT_NE(to_csv(rep).find("conjectural lower bound attained"), std::string::npos);
}

TEST(SpiderScan, RejectsBadRanges) {
    EXPECT_THROW(run_spider_scan(1, 3), RangeError);
    EXPECT_THROW(run_spider_scan(3, 1), RangeError);
}

TEST(Json, FormulaAndCertificateRoundTrip) {
    auto r = ar_formula(parse_forest_spec("M(2)"), 4);
    auto j = to_json(r);
    EXPECT_TRUE(j["lower"].is_null());
    EXPECT_EQ(j["status"], "OutOfRange");
    auto c = construct_for(parse_forest_spec("S(3,1)"), 20);
    EXPECT_EQ(certificate_from_json(to_json(c.certificate)), c.certificate);
    EXPECT_THROW(certificate_from_json(json{{"kind", "JoinPlusStarAvoider"}}), ParseError);
    EXPECT_THROW(certificate_from_json(json{{"kind", "Bogus"}}), ParseError);
}

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "prymtopo/corpus.hpp"
#include "prymtopo/errors.hpp"
#include "prymtopo/topology.hpp"

using namespace prymtopo;

TEST(Invariants, GenusZeroRowFive) {
    const InvariantRecord r = invariants(parse_discriminant(5));
    EXPECT_EQ(r.genus, 0);
    EXPECT_EQ(r.chi, Rat(-7, 15));
    EXPECT_EQ(r.C, 1);
    EXPECT_EQ(r.e2, 0);
    EXPECT_EQ(r.e3, 1);
    EXPECT_EQ(r.e5, 1);
    EXPECT_EQ(r.e6, 0);
    EXPECT_EQ(r.h0, 1);
}

TEST(Invariants, LargerRows) {
    const InvariantRecord r105 = invariants(parse_discriminant(105));
    EXPECT_EQ(r105.genus, 27);
    EXPECT_EQ(r105.chi, Rat(-84));
    EXPECT_EQ(r105.C, 32);
    EXPECT_EQ(r105.e2, 0);
    EXPECT_EQ(r105.e3, 0);

    const InvariantRecord r76 = invariants(parse_discriminant(76));
    EXPECT_EQ(r76.genus, 11);
    EXPECT_EQ(r76.chi, Rat(-133, 3));
    EXPECT_EQ(r76.C, 21);
    EXPECT_EQ(r76.e2, 4);
    EXPECT_EQ(r76.e3, 2);
}

TEST(Invariants, DiscriminantTwelveHasOrderSixPoint) {
    const InvariantRecord r = invariants(parse_discriminant(12));
    EXPECT_EQ(r.genus, 0);
    EXPECT_EQ(r.e2, 1);
    EXPECT_EQ(r.e3, 0);
    EXPECT_EQ(r.e6, 1);
}

TEST(Invariants, RejectsSquares) {
    EXPECT_THROW(invariants(parse_discriminant(49)), SquareDiscriminant);
}

TEST(SolveGenus, RejectsNonIntegralOrNegative) {
    EXPECT_EQ(solve_genus(5, 1, Rat(2)), 0);
    EXPECT_EQ(solve_genus(5, 1, Rat(-4)), 3);
    EXPECT_THROW(solve_genus(5, 1, Rat(1)), NonIntegralGenus);
    EXPECT_THROW(solve_genus(5, 1, Rat(1, 3)), NonIntegralGenus);
    EXPECT_THROW(solve_genus(5, 1, Rat(4)), NonIntegralGenus);
}

TEST(Invariants, EmbeddedTablesMatch) {
    for (const std::string_view text : {embedded_table1_csv(), embedded_table3_csv()}) {
        for (const CorpusRow& expected : parse_corpus_csv(text)) {
            const CorpusRow actual = to_row(invariants(parse_discriminant(expected.D)));
            EXPECT_EQ(actual, expected) << "D = " << expected.D;
        }
    }
}

TEST(Invariants, ShortcutFormulaAboveTwelve) {
    for (const InvariantRecord& r : sweep(13, 2000, 2)) {
        const Rat g = Rat(r.h0) - r.chi / Rat(2) - Rat(r.C, 2) - Rat(r.e2, 4) - Rat(r.e3, 3);
        ASSERT_EQ(g, Rat(r.genus)) << r.D;
        ASSERT_EQ(r.e5, 0);
        ASSERT_EQ(r.e6, 0);
    }
}

TEST(Bounds, Examples) {
    const Discriminant d200 = parse_discriminant(200);
    const InvariantRecord r200 = invariants(d200);
    EXPECT_EQ(r200.genus, 56);
    const BoundsReport b200 = check_bounds(d200, r200);
    EXPECT_TRUE(b200.all_ok());
    // 1 + 200^{3/2} * 35 / (48 pi^2) and 3 * 200^{3/2} / 200 - 200/6 - 200^{3/4} - 150.
    EXPECT_NEAR(b200.genus_upper, 209.964, 1e-3);
    EXPECT_NEAR(b200.genus_lower, -194.090, 1e-3);

    const Discriminant d5 = parse_discriminant(5);
    const BoundsReport b5 = check_bounds(d5, invariants(d5));
    // e3(5) = 1 exceeds 5/6; every other bound holds.
    EXPECT_FALSE(b5.e3_ok);
    EXPECT_FALSE(b5.all_ok());
    EXPECT_TRUE(b5.upper_ok && b5.lower_ok && b5.cusp_ok && b5.e2_ok);
    EXPECT_LT(b5.genus_lower, 0);
}

TEST(Bounds, LowerBoundPositivePastThreshold) {
    // 1051 itself is 3 mod 4; these are the first discriminants above 1050.
    for (const std::int64_t d : {1052, 1053, 1056, 1057, 1060}) {
        const Discriminant D = parse_discriminant(d);
        const InvariantRecord r = invariants(D);
        const BoundsReport b = check_bounds(D, r);
        EXPECT_GT(b.genus_lower, 0) << d;
        EXPECT_GE(r.genus, 1) << d;
        EXPECT_TRUE(b.all_ok()) << d;
    }
}

TEST(Bounds, DetectsViolations) {
    const Discriminant D = parse_discriminant(200);
    InvariantRecord r = invariants(D);
    r.genus = 1000;
    EXPECT_FALSE(check_bounds(D, r).upper_ok);
    r.genus = 56;
    r.e2 = 100;
    EXPECT_FALSE(check_bounds(D, r).e2_ok);
    r.e2 = 6;
    r.e3 = 40;
    EXPECT_FALSE(check_bounds(D, r).e3_ok);
    r.e3 = 4;
    r.C = 100000;
    EXPECT_FALSE(check_bounds(D, r).cusp_ok);
}

TEST(GenusZero, Classification) {
    const std::vector<std::int64_t> expected{5, 8, 12, 13, 17, 20};
    EXPECT_EQ(genus_zero_classification(21), expected);
    EXPECT_EQ(genus_zero_classification(200), expected);
}

TEST(Sweep, SkipsSquaresAndIsOrdered) {
    const std::vector<InvariantRecord> rows = sweep(5, 200, 3);
    EXPECT_EQ(rows.size(), 86u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LT(rows[i - 1].D, rows[i].D);
    }
    EXPECT_EQ(sweep(5, 5, 1).size(), 1u);
    EXPECT_TRUE(sweep(36, 36, 1).empty());
}

TEST(Sweep, IndependentOfWorkerCount) {
    EXPECT_EQ(sweep(5, 1500, 1), sweep(5, 1500, 7));
}

#include "oracles.hpp"

#include <dcoal/closed_forms.hpp>
#include <dcoal/dc_solver.hpp>
#include <dcoal/ddset.hpp>
#include <dcoal/domatic.hpp>
#include <dcoal/errors.hpp>

#include <algorithm>

#include <gtest/gtest.h>

using namespace dcoal;

TEST(GammaClosed, Values)
{
    EXPECT_EQ(gamma_x2_closed(Family::cycle, 6), 4);
    EXPECT_EQ(gamma_x2_closed(Family::cycle, 7), 5);
    EXPECT_EQ(gamma_x2_closed(Family::cycle, 3), 2);
    EXPECT_EQ(gamma_x2_closed(Family::complete_bipartite, 3, 5), 4);
}

TEST(GammaClosed, RefusesOutsideRange)
{
    EXPECT_THROW(gamma_x2_closed(Family::cycle, 2), NotApplicableError);
    EXPECT_THROW(gamma_x2_closed(Family::complete_bipartite, 2, 5), NotApplicableError);
    EXPECT_THROW(gamma_x2_closed(Family::path, 5), NotApplicableError);
    EXPECT_THROW(gamma_x2_closed(Family::complete, 5), NotApplicableError);
}

TEST(DcClosed, Values)
{
    EXPECT_EQ(dc_closed(Family::path, 2), 2);
    EXPECT_EQ(dc_closed(Family::path, 5), 2);
    EXPECT_EQ(dc_closed(Family::path, 6), 3);
    EXPECT_EQ(dc_closed(Family::cycle, 9), 3);
    EXPECT_EQ(dc_closed(Family::complete_bipartite, 4, 3), 5);
    EXPECT_EQ(dc_closed(Family::complete, 7), 7);
    EXPECT_EQ(dc_closed_source(Family::complete), "remark");
    EXPECT_EQ(dc_closed_source(Family::path), "theorem");
}

TEST(DcClosed, RefusesOutsideRange)
{
    EXPECT_THROW(dc_closed(Family::path, 1), NotApplicableError);
    EXPECT_THROW(dc_closed(Family::cycle, 2), NotApplicableError);
    EXPECT_THROW(dc_closed(Family::complete_bipartite, 5, 2), NotApplicableError);
    EXPECT_THROW(dc_closed(Family::complete, 1), NotApplicableError);
    EXPECT_THROW(dc_closed(Family::star, 5), NotApplicableError);
}

TEST(ClosedForms, MatchSolvers)
{
    for (int n = 2; n <= 12; ++n)
        EXPECT_EQ(dc_number(make_path(n)).value, dc_closed(Family::path, n)) << "P_" << n;
    for (int n = 3; n <= 12; ++n) {
        EXPECT_EQ(dc_number(make_cycle(n)).value, dc_closed(Family::cycle, n)) << "C_" << n;
        EXPECT_EQ(gamma_x2(make_cycle(n)).value, gamma_x2_closed(Family::cycle, n)) << "C_" << n;
    }
    for (int r = 3; r <= 7; ++r)
        EXPECT_EQ(dc_number(make_complete_bipartite(r, 3)).value, dc_closed(Family::complete_bipartite, r, 3))
            << "K_" << r << ",3";
    for (int n = 2; n <= 9; ++n)
        EXPECT_EQ(dc_number(make_complete(n)).value, dc_closed(Family::complete, n)) << "K_" << n;
}

TEST(ClosedForms, CompleteBipartiteFormulaFailsFromSFour)
{
    // Exact values, confirmed by unpruned enumeration below. With s >= 4 a singleton from the
    // smaller side cannot be completed to a DDS by any other part, so r + s - 2 is out of reach.
    struct Case {
        int r, s, dc;
    };
    for (auto [r, s, dc] : {Case{4, 4, 5}, Case{5, 4, 6}, Case{5, 5, 6}, Case{6, 4, 7}, Case{6, 6, 8}}) {
        auto g = make_complete_bipartite(r, s);
        EXPECT_EQ(dc_number(g).value, dc) << "K_" << r << "," << s;
        EXPECT_LT(dc, dc_closed(Family::complete_bipartite, r, s));
        if (r + s <= 9) {
            EXPECT_EQ(oracle::dc(g), dc) << "K_" << r << "," << s;
        }
    }
}

TEST(Recognise, Families)
{
    auto has = [](const Graph & g, FamilyMatch m) {
        auto found = recognise_families(g);
        return std::ranges::find(found, m) != found.end();
    };
    EXPECT_TRUE(has(make_path(5), {Family::path, 5, 0}));
    EXPECT_TRUE(has(make_cycle(5), {Family::cycle, 5, 0}));
    EXPECT_TRUE(has(make_cycle(3), {Family::complete, 3, 0}));
    EXPECT_TRUE(has(make_complete_bipartite(3, 4), {Family::complete_bipartite, 4, 3}));
    EXPECT_TRUE(has(make_star(5), {Family::complete_bipartite, 4, 1}));
    EXPECT_TRUE(has(make_complete(2), {Family::path, 2, 0}));
    EXPECT_TRUE(recognise_families(make_complete(1)).empty());

    // A relabelled path: 2-0-3-1.
    std::vector<Edge> e{{2, 0}, {0, 3}, {3, 1}};
    EXPECT_TRUE(has(from_edge_list(4, e), {Family::path, 4, 0}));

    // Two disjoint edges are not a path.
    std::vector<Edge> two{{0, 1}, {2, 3}};
    EXPECT_TRUE(recognise_families(from_edge_list(4, two)).empty());
    // C_5 plus a chord is none of the families.
    std::vector<Edge> chord{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
    EXPECT_TRUE(recognise_families(from_edge_list(5, chord)).empty());
}

TEST(Bounds, PathSix)
{
    auto g = make_path(6);
    auto dc = dc_number(g);
    auto report = check_bounds(g, gamma_x2(g).value, d_x2(g).value, dc.value, dc.witness);
    auto & e = report.entry(BoundId::dc_le_delta_plus_1);
    EXPECT_TRUE(e.applicable);
    EXPECT_EQ(e.holds, true);
    EXPECT_EQ(e.lhs, 3);
    EXPECT_EQ(e.rhs, 3);
    EXPECT_TRUE(report.all_hold());
}

TEST(Bounds, CompleteFour)
{
    auto g = make_complete(4);
    auto dc = dc_number(g);
    auto report = check_bounds(g, 2, 2, dc.value, dc.witness);
    auto & e = report.entry(BoundId::dc_ge_2domatic);
    EXPECT_EQ(e.lhs, 4);
    EXPECT_EQ(e.rhs, 4);
    EXPECT_EQ(e.holds, true);
    EXPECT_FALSE(report.entry(BoundId::dc_le_delta_plus_1).applicable);
    EXPECT_FALSE(report.entry(BoundId::dc_le_delta_plus_1).holds.has_value());
    EXPECT_EQ(report.entry(BoundId::lemma_partner_cap).lhs, 3);
    EXPECT_EQ(report.entry(BoundId::lemma_partner_cap).rhs, 3);
}

TEST(Bounds, IsolatedVertex)
{
    auto report = check_bounds(make_complete(1), std::nullopt, std::nullopt, 0, std::nullopt);
    auto & e = report.entry(BoundId::dc_zero_isolated);
    EXPECT_TRUE(e.applicable);
    EXPECT_EQ(e.holds, true);
    EXPECT_FALSE(report.entry(BoundId::dc_range).applicable);
    EXPECT_FALSE(report.entry(BoundId::lemma_partner_cap).applicable);
    EXPECT_TRUE(report.all_hold());
}

TEST(Bounds, DetectsFalseInputs)
{
    auto g = make_path(6);
    auto bad = check_bounds(g, 4, 1, 4, std::nullopt);
    EXPECT_FALSE(bad.entry(BoundId::dc_le_delta_plus_1).holds.value());
    EXPECT_FALSE(bad.all_hold());

    auto zero = check_bounds(g, 4, 1, 0, std::nullopt);
    EXPECT_FALSE(zero.entry(BoundId::dc_zero_isolated).holds.value());
    EXPECT_FALSE(zero.entry(BoundId::dc_range).holds.value());

    Partition not_dc{{g.vertices()}};
    auto lemma = check_bounds(g, 4, 1, 3, not_dc);
    EXPECT_EQ(lemma.entry(BoundId::lemma_partner_cap).lhs, -1);
    EXPECT_FALSE(lemma.entry(BoundId::lemma_partner_cap).holds.value());
}

TEST(ClosedFormCheck, AppliesOnlyToFamilies)
{
    auto ok = check_closed_forms(make_cycle(7), 5, 3);
    EXPECT_TRUE(ok.applicable);
    EXPECT_TRUE(ok.ok);

    auto wrong = check_closed_forms(make_cycle(7), 5, 4);
    EXPECT_FALSE(wrong.ok);
    EXPECT_EQ(wrong.mismatches.size(), 1U);

    EXPECT_FALSE(check_closed_forms(make_star(4), 4, 2).applicable);
    std::vector<Edge> chord{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
    EXPECT_FALSE(check_closed_forms(from_edge_list(5, chord), 3, 3).applicable);
}

#include "oracles.hpp"

#include <dcoal/dc_solver.hpp>
#include <dcoal/ddset.hpp>
#include <dcoal/domatic.hpp>
#include <dcoal/errors.hpp>

#include <gtest/gtest.h>

using namespace dcoal;

namespace {
    auto singletons(int n)
    {
        Partition p;
        for (Vertex v = 0; v < n; ++v)
            p.parts.push_back(VertexSet::singleton(v));
        return p;
    }

    auto isolate_free_labeled(int n)
    {
        std::vector<Graph> graphs;
        for (auto & g : enumerate_labeled_graphs(n))
            if (! oracle::has_isolated_vertex(g))
                graphs.push_back(g);
        return graphs;
    }
}

TEST(Coalition, Examples)
{
    EXPECT_TRUE(forms_double_coalition(make_complete(3), VertexSet::of({0}), VertexSet::of({1})));
    auto p5 = make_path(5);
    for (Vertex b = 0; b < 5; ++b)
        if (b != 2) {
            EXPECT_FALSE(forms_double_coalition(p5, VertexSet::of({2}), VertexSet::of({b})));
        }
    auto c4 = make_cycle(4);
    EXPECT_FALSE(forms_double_coalition(c4, c4.vertices().without(3), VertexSet::of({3})));
}

TEST(Coalition, RejectsOverlapAndEmpty)
{
    auto k3 = make_complete(3);
    EXPECT_THROW(forms_double_coalition(k3, VertexSet::of({0, 1}), VertexSet::of({1})), InputError);
    EXPECT_THROW(forms_double_coalition(k3, VertexSet{}, VertexSet::of({1})), InputError);
}

TEST(Validate, CompleteGraphSingletons)
{
    for (int n = 2; n <= 7; ++n) {
        auto v = validate_dc_partition(make_complete(n), singletons(n));
        EXPECT_TRUE(v.valid);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            EXPECT_EQ(v.partner_map[i].size(), static_cast<std::size_t>(n - 1));
    }
}

TEST(Validate, PathConstruction)
{
    // {V \ {v3, v4}, {v3}, {v4}} with 1-based labels.
    auto p6 = make_path(6);
    Partition p{{p6.vertices() - VertexSet::of({2, 3}), VertexSet::of({2}), VertexSet::of({3})}};
    auto v = validate_dc_partition(p6, p);
    EXPECT_TRUE(v.valid);
    EXPECT_EQ(v.partner_map[0], (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(v.partner_map[1], (std::vector<std::size_t>{0}));
    EXPECT_EQ(v.partner_map[2], (std::vector<std::size_t>{0}));
}

TEST(Validate, Failures)
{
    auto c3 = make_cycle(3);
    auto whole = validate_dc_partition(c3, Partition{{c3.vertices()}});
    EXPECT_FALSE(whole.valid);
    EXPECT_EQ(whole.reason, DcReason::part_is_dds);
    EXPECT_EQ(whole.offending_part, 0U);

    auto p4 = make_path(4);
    auto lonely = validate_dc_partition(p4, singletons(4));
    EXPECT_FALSE(lonely.valid);
    EXPECT_EQ(lonely.reason, DcReason::part_has_no_partner);

    auto overlap = validate_dc_partition(c3, Partition{{VertexSet::of({0, 1}), VertexSet::of({1, 2})}});
    EXPECT_EQ(overlap.reason, DcReason::structural);
    EXPECT_FALSE(overlap.detail.empty());
    EXPECT_TRUE(overlap.partner_map.empty());
}

TEST(Validate, PartnerMapSymmetric)
{
    SplitMix64 rng{17};
    for (int trial = 0; trial < 300; ++trial) {
        auto g = gen_random(8, 0.6, rng.next());
        std::vector<int> labels(8);
        for (auto & l : labels)
            l = static_cast<int>(rng.next() % 4);
        Partition p;
        for (auto & part : partition_from_labels(labels).parts)
            if (! part.empty())
                p.parts.push_back(part);
        auto v = validate_dc_partition(g, p);
        for (std::size_t i = 0; i < v.partner_map.size(); ++i)
            for (auto j : v.partner_map[i])
                ASSERT_NE(std::ranges::find(v.partner_map[j], i), v.partner_map[j].end());
    }
}

TEST(DcNumber, Paths)
{
    for (int n = 2; n <= 12; ++n) {
        auto r = dc_number(make_path(n));
        EXPECT_EQ(r.value, n <= 5 ? 2 : 3) << "P_" << n;
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(validate_dc_partition(make_path(n), *r.witness).valid);
    }
}

TEST(DcNumber, Cycles)
{
    for (int n = 3; n <= 12; ++n)
        EXPECT_EQ(dc_number(make_cycle(n)).value, 3) << "C_" << n;
}

TEST(DcNumber, StarIsTwo)
{
    EXPECT_EQ(dc_number(make_star(4)).value, 2);
    EXPECT_EQ(oracle::dc(make_star(4)), 2);
}

TEST(DcNumber, IsolatedVertexGivesZero)
{
    auto r = dc_number(make_complete(1));
    EXPECT_EQ(r.value, 0);
    EXPECT_FALSE(r.witness.has_value());
    std::vector<Edge> e{{0, 1}, {1, 2}};
    EXPECT_EQ(dc_number(from_edge_list(4, e)).value, 0);
    EXPECT_THROW(dc_number(Graph{}), InputError);
}

TEST(DcNumber, ResourceLimits)
{
    EXPECT_THROW(dc_number(make_cycle(14)), ResourceLimitError);
    EXPECT_EQ(dc_number(make_cycle(14), SearchLimits{.max_order = 14}).value, 3);
    EXPECT_THROW(dc_number(make_path(10), SearchLimits{.node_budget = 5}), ResourceLimitError);
}

TEST(DcNumber, DegreeBoundModeAgrees)
{
    SearchLimits fast{.use_degree_bound = true};
    for (int n = 2; n <= 10; ++n)
        EXPECT_EQ(dc_number(make_path(n), fast).value, dc_number(make_path(n)).value);
    EXPECT_EQ(dc_number(make_star(6), fast).value, dc_number(make_star(6)).value);
}

TEST(DcNumber, WitnessIsFirstOptimumInRestrictedGrowthOrder)
{
    auto p6 = make_path(6);
    auto r = dc_number(p6);
    ASSERT_TRUE(r.witness);

    // Scan restricted growth strings in lexicographic order for the first valid 3-part partition.
    std::optional<Partition> first;
    oracle::Matrix m{p6};
    oracle::for_each_set_partition(6, [&](const oracle::Blocks & blocks) {
        if (first || blocks.size() != 3 || ! oracle::is_dc_partition(m, blocks))
            return;
        Partition p;
        for (auto & b : blocks) {
            VertexSet s;
            for (auto v : b)
                s.insert(v);
            p.parts.push_back(s);
        }
        first = p;
    });
    ASSERT_TRUE(first);
    EXPECT_EQ(*r.witness, *first);
}

TEST(DcNumber, AgreesWithOracleOnAllIsolateFreeGraphsUpToFive)
{
    for (int n = 2; n <= 5; ++n)
        for (auto & g : isolate_free_labeled(n)) {
            auto r = dc_number(g);
            ASSERT_EQ(r.value, oracle::dc(g)) << to_graph6(g);
            ASSERT_TRUE(r.witness);
            ASSERT_EQ(static_cast<int>(r.witness->size()), r.value);
            ASSERT_TRUE(validate_dc_partition(g, *r.witness).valid);
        }
}

TEST(DcNumber, AgreesWithOracleOnFamiliesUpToSeven)
{
    for (int n = 2; n <= 7; ++n) {
        EXPECT_EQ(dc_number(make_path(n)).value, oracle::dc(make_path(n)));
        EXPECT_EQ(dc_number(make_star(n)).value, oracle::dc(make_star(n)));
        if (n >= 3) {
            EXPECT_EQ(dc_number(make_cycle(n)).value, oracle::dc(make_cycle(n)));
        }
    }
}

TEST(DcNumber, OracleAlsoGivesZeroForIsolatedGraphs)
{
    // The oracle has no special case for isolated vertices.
    for (auto & g : enumerate_labeled_graphs(4))
        if (oracle::has_isolated_vertex(g)) {
            ASSERT_EQ(oracle::dc(g), 0);
        }
}

TEST(DcNumber, BoundsOnRandomGraphs)
{
    SplitMix64 rng{2024};
    for (int trial = 0; trial < 120; ++trial) {
        auto g = gen_random(6 + trial % 5, 0.5, rng.next());
        auto stats = degree_stats(g);
        auto r = dc_number(g);
        if (stats.isolated_present) {
            ASSERT_EQ(r.value, 0);
            continue;
        }
        ASSERT_GE(r.value, 2);
        ASSERT_LE(r.value, g.order());
        ASSERT_GE(r.value, 2 * d_x2(g).value);
        if (stats.min_degree == 1) {
            ASSERT_LE(r.value, stats.max_degree + 1);
        }
        ASSERT_LE(max_coalitions_per_part(g, *r.witness), stats.max_degree);
    }
}

TEST(Construct, SmallExamples)
{
    auto k2 = construct_dc_partition(make_complete(2));
    EXPECT_EQ(k2, (Partition{{VertexSet::of({0}), VertexSet::of({1})}}));

    // d×2(C_6) = 1; V shrinks to {1, 2, 4, 5}, split as {1}, {2, 4, 5}; the remainder {0, 3}
    // partners {2, 4, 5} and becomes the third part.
    auto c6 = construct_dc_partition_traced(make_cycle(6));
    EXPECT_EQ(c6.domatic_number, 1);
    EXPECT_EQ(c6.branch, ConstructBranch::remainder_added);
    EXPECT_EQ(c6.partition, (Partition{{VertexSet::of({1}), VertexSet::of({2, 4, 5}), VertexSet::of({0, 3})}}));

    auto k4 = construct_dc_partition_traced(make_complete(4));
    EXPECT_EQ(k4.domatic_number, 2);
    EXPECT_GE(k4.partition.size(), 4U);
    EXPECT_TRUE(validate_dc_partition(make_complete(4), k4.partition).valid);

    EXPECT_THROW(construct_dc_partition(make_complete(1)), NoDdsError);
}

TEST(Construct, EveryBranchOccurs)
{
    // Every branch of the final step is exercised somewhere among the small labelled graphs.
    bool seen[3] = {false, false, false};
    for (int n = 2; n <= 6; ++n)
        for (auto & g : isolate_free_labeled(n))
            seen[static_cast<int>(construct_dc_partition_traced(g).branch)] = true;
    EXPECT_TRUE(seen[static_cast<int>(ConstructBranch::last_part_minimal)]);
    EXPECT_TRUE(seen[static_cast<int>(ConstructBranch::remainder_added)]);
    EXPECT_TRUE(seen[static_cast<int>(ConstructBranch::remainder_merged)]);
}

TEST(Construct, ValidAndAtLeastTwiceDomaticUpToSix)
{
    for (int n = 2; n <= 6; ++n)
        for (auto & g : isolate_free_labeled(n)) {
            auto built = construct_dc_partition_traced(g);
            auto size = static_cast<int>(built.partition.size());
            ASSERT_TRUE(validate_dc_partition(g, built.partition).valid) << to_graph6(g);
            ASSERT_EQ(built.domatic_number, d_x2(g).value);
            ASSERT_GE(size, 2 * built.domatic_number) << to_graph6(g);
            ASSERT_LE(size, 2 * built.domatic_number + 1) << to_graph6(g);
            ASSERT_EQ(size == 2 * built.domatic_number + 1, built.branch == ConstructBranch::remainder_added);
        }
}

TEST(MaxCoalitions, Examples)
{
    EXPECT_EQ(max_coalitions_per_part(make_complete(4), singletons(4)), 3);

    auto c6 = make_cycle(6);
    Partition c6p{{c6.vertices() - VertexSet::of({4, 5}), VertexSet::of({4}), VertexSet::of({5})}};
    EXPECT_EQ(max_coalitions_per_part(c6, c6p), 2);

    auto p6 = make_path(6);
    Partition p6p{{p6.vertices() - VertexSet::of({2, 3}), VertexSet::of({2}), VertexSet::of({3})}};
    EXPECT_EQ(max_coalitions_per_part(p6, p6p), 2);

    EXPECT_THROW(max_coalitions_per_part(make_path(4), singletons(4)), InputError);
}

#include <gtest/gtest.h>

#include "ringage/analytic.hpp"
#include "ringage/model.hpp"
#include "ringage/rng.hpp"

using namespace ringage;

TEST(PartitionFromPlacement, TwoOppositeCutsGiveEqualLines) {
    auto p = partition_from_placement(JammerPlacement({0, 4}), 8);
    EXPECT_EQ(p, Partition({line_segment(4), line_segment(4)}, 8));
}

TEST(PartitionFromPlacement, NoCutsGiveFullRing) {
    auto p = partition_from_placement(JammerPlacement{}, 8);
    ASSERT_EQ(p.segment_count(), 1);
    EXPECT_EQ(p.segments[0].kind, SegmentKind::Ring);
    EXPECT_EQ(p.segments[0].size, 8);
}

TEST(PartitionFromPlacement, ThreeAdjacentCutsOnSix) {
    // cutting links 0,1,2 severs (0,1),(1,2),(2,3): nodes 1 and 2 are
    // isolated, nodes 3,4,5,0 stay connected
    auto p = partition_from_placement(JammerPlacement({0, 1, 2}), 6);
    std::vector<std::int64_t> expected{1, 1, 4};
    EXPECT_EQ(p.sorted_sizes(), expected);
    for (const auto& s : p.segments) EXPECT_EQ(s.kind, SegmentKind::Line);
}

TEST(PartitionFromPlacement, RejectsBadInput) {
    EXPECT_THROW(partition_from_placement(JammerPlacement({8}), 8), std::invalid_argument);
    EXPECT_THROW(partition_from_placement(JammerPlacement{}, 0), std::invalid_argument);
}

TEST(PartitionFromPlacement, AllLinksCutGivesIsolatedNodes) {
    auto p = partition_from_placement(JammerPlacement({0, 1, 2, 3}), 4);
    ASSERT_EQ(p.segment_count(), 4);
    for (const auto& s : p.segments) EXPECT_EQ(s.size, 1);
}

TEST(PartitionFromPlacement, RotationEquivariant) {
    Xoshiro256pp rng(7);
    const std::int64_t n = 24;
    for (int trial = 0; trial < 20; ++trial) {
        auto k = static_cast<std::int64_t>(1 + rng.next_below(n - 1));
        auto cuts = sample_distinct_indices(rng, n, k);
        auto base = partition_from_placement(JammerPlacement(cuts), n).sorted_sizes();
        for (std::int64_t r : {1, 5, 23}) {
            std::vector<std::int64_t> rotated;
            for (auto c : cuts) rotated.push_back((c + r) % n);
            auto sizes = partition_from_placement(JammerPlacement(rotated), n).sorted_sizes();
            EXPECT_EQ(sizes, base);
        }
    }
}

TEST(PartitionFromPlacement, SegmentCountAndTotal) {
    Xoshiro256pp rng(11);
    for (std::int64_t n : {3, 9, 17, 64}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto k = static_cast<std::int64_t>(1 + rng.next_below(static_cast<std::uint64_t>(n)));
            auto p = partition_from_placement(JammerPlacement(sample_distinct_indices(rng, n, k)), n);
            EXPECT_EQ(p.segment_count(), k);
            std::int64_t total = 0;
            for (const auto& s : p.segments) total += s.size;
            EXPECT_EQ(total, n);
        }
    }
}

TEST(JammerPlacement, MergesDuplicates) {
    JammerPlacement p({3, 5, 3});
    EXPECT_EQ(p.count(), 2);
    EXPECT_EQ(p.cut_links(), (std::vector<std::int64_t>{3, 5}));
}

TEST(MiniringModel, ReplacesLinesWithRings) {
    Partition lines({line_segment(4), line_segment(4)}, 8);
    auto rings = to_miniring_model(lines);
    EXPECT_EQ(rings, Partition({ring_segment(4), ring_segment(4)}, 8));
    EXPECT_EQ(to_miniring_model(rings), rings);
}

TEST(MiniringModel, PreservesSizes) {
    Partition p({line_segment(5), line_segment(3)}, 8);
    auto m = to_miniring_model(p);
    EXPECT_EQ(m.sorted_sizes(), p.sorted_sizes());
    for (const auto& s : m.segments) EXPECT_EQ(s.kind, SegmentKind::Ring);
}

TEST(MiniringModel, IsolatedNodeUnchangedInAge) {
    EXPECT_EQ(line_segment(1), ring_segment(1));
    Rates rates(1.0, 1.0, 4);
    EXPECT_DOUBLE_EQ(line_ages(1, rates)[0], ring_node_age(1, rates));
}

TEST(Partition, EqualityIgnoresSegmentOrder) {
    Partition a({line_segment(4), line_segment(2)}, 6);
    Partition b({line_segment(2), line_segment(4)}, 6);
    EXPECT_EQ(a, b);
    Partition c({line_segment(3), line_segment(3)}, 6);
    EXPECT_NE(a, c);
}

TEST(Partition, RejectsSizeMismatch) {
    EXPECT_THROW(Partition({line_segment(3)}, 6), std::invalid_argument);
}

TEST(Rates, ValidatesAndDerivesLinkRates) {
    EXPECT_THROW(Rates(0.0, 1.0, 4), std::invalid_argument);
    EXPECT_THROW(Rates(1.0, -1.0, 4), std::invalid_argument);
    EXPECT_THROW(Rates(1.0, 1.0, 0), std::invalid_argument);
    Rates r(2.0, 3.0, 6);
    EXPECT_DOUBLE_EQ(r.source_node_rate(), 0.5);
    EXPECT_DOUBLE_EQ(r.neighbor_rate(), 1.5);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ringage/analytic.hpp"

using namespace ringage;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const Rates kUnit22(1.0, 1.0, 2);

}  // namespace

TEST(RingNodeAge, IsolatedNodeEqualsSourceOnlyAge) {
    EXPECT_DOUBLE_EQ(ring_node_age(1, Rates(1.0, 1.0, 7)), 7.0);
    EXPECT_DOUBLE_EQ(ring_node_age(1, Rates(3.0, 2.0, 10)), 15.0);
}

TEST(RingNodeAge, TwoNodeRing) {
    // sum term 1/(1/2+1) = 2/3, tail (2/2)*(2/3) = 2/3
    EXPECT_NEAR(ring_node_age(2, kUnit22), 4.0 / 3.0, 1e-12);
}

TEST(RingNodeAge, SourceRateUsesOriginalRingSize) {
    // mini-ring of 2 inside a ring of 4: 1/(1/4+1) = 4/5, tail (4/2)*(4/5) = 8/5
    EXPECT_NEAR(ring_node_age(2, Rates(1.0, 1.0, 4)), 12.0 / 5.0, 1e-12);
}

TEST(RingNodeAge, MatchesRecursionSolver) {
    for (std::int64_t n : {64, 128}) {
        Rates rates(1.0, 1.0, n);
        for (std::int64_t n0 = 1; n0 <= 64; ++n0)
            EXPECT_LE(rel_err(ring_node_age(n0, rates), ring_age_profile(n0, rates)[0]), 1e-12);
    }
}

TEST(RingNodeAge, SqrtScalingOfFullRing) {
    double lo = 1e300, hi = 0.0;
    for (std::int64_t n : {100, 400, 1600}) {
        double ratio = ring_node_age(n, Rates(1.0, 1.0, n)) / std::sqrt(static_cast<double>(n));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    EXPECT_LE(hi / lo, 1.15);
}

TEST(RingNodeAge, RejectsSegmentLargerThanRing) {
    EXPECT_THROW(ring_node_age(5, Rates(1.0, 1.0, 4)), std::invalid_argument);
}

TEST(LineAges, SingleNode) {
    auto ages = line_ages(1, Rates(2.0, 1.0, 5));
    ASSERT_EQ(ages.size(), 1u);
    EXPECT_DOUBLE_EQ(ages[0], 10.0);
}

TEST(LineAges, TwoNodeLine) {
    auto ages = line_ages(2, kUnit22);
    ASSERT_EQ(ages.size(), 2u);
    EXPECT_NEAR(ages[0], 1.5, 1e-12);
    EXPECT_NEAR(ages[1], 1.5, 1e-12);
}

TEST(LineAges, TwoNodeLineInLargerRing) {
    // full set 1/(2/4) = 2, then corner (1+0.5*2)/(1/4+1/2) = 8/3
    auto ages = line_ages(2, Rates(1.0, 1.0, 4));
    EXPECT_NEAR(ages[0], 8.0 / 3.0, 1e-12);
    EXPECT_NEAR(ages[1], 8.0 / 3.0, 1e-12);
}

TEST(LineAges, SixNodeOrdering) {
    auto a = line_ages(6, Rates(1.0, 1.0, 6));
    EXPECT_GE(a[0], a[1]);
    EXPECT_GE(a[1], a[2]);
    EXPECT_NEAR(a[2], a[3], 1e-12);
    EXPECT_LE(a[3], a[4]);
    EXPECT_LE(a[4], a[5]);
}

TEST(LineAges, MatchesFullTable) {
    Rates rates(1.0, 1.0, 64);
    for (std::int64_t n0 : {1, 2, 5, 17, 32}) {
        auto rolling = line_ages(n0, rates);
        LineAgeTable table(n0, rates);
        for (std::int64_t i = 1; i <= n0; ++i)
            EXPECT_DOUBLE_EQ(rolling[static_cast<std::size_t>(i - 1)], table.age(i, 1));
    }
}

TEST(LineAges, CenterwardMonotoneAndPalindromic) {
    for (std::int64_t n0 : {2, 3, 5, 8, 16, 33, 64, 128}) {
        for (std::int64_t n : {n0, 2 * n0}) {
            auto a = line_ages(n0, Rates(1.0, 1.0, n));
            for (std::int64_t i = 1; i + 1 <= n0 - i; ++i)
                EXPECT_LE(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i - 1)] + 1e-12)
                    << "n0=" << n0 << " n=" << n << " i=" << i;
            for (std::int64_t i = 0; i < n0; ++i)
                EXPECT_NEAR(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(n0 - 1 - i)],
                            1e-12 * a[0]);
        }
    }
}

TEST(LineCornerClosedForm, MatchesHandValues) {
    EXPECT_NEAR(line_corner_age_closed_form(2, kUnit22), 1.5, 1e-12);
    EXPECT_DOUBLE_EQ(line_corner_age_closed_form(1, Rates(1.0, 1.0, 6)), 6.0);
}

TEST(LineCornerClosedForm, MatchesRecursion) {
    for (std::int64_t n : {64, 100, 128}) {
        Rates rates(1.0, 1.0, n);
        for (std::int64_t n0 = 1; n0 <= std::min<std::int64_t>(n, 64); ++n0)
            EXPECT_LE(rel_err(line_corner_age_closed_form(n0, rates), line_ages(n0, rates)[0]), 1e-9)
                << "n0=" << n0 << " n=" << n;
    }
}

TEST(LineCornerClosedForm, SandwichedByRingAge) {
    Rates rates(1.0, 1.0, 100);
    double corner = line_corner_age_closed_form(50, rates);
    double ring = ring_node_age(50, rates);
    EXPECT_GE(corner, ring);
    EXPECT_LE(corner, 2.0 * ring);
}

TEST(ContiguousSetAge, FullRingSetIsBaseCase) {
    EXPECT_DOUBLE_EQ(contiguous_set_age(ContiguousSet(1, 5, ring_segment(5)), Rates(1.0, 1.0, 15)),
                     3.0);
}

TEST(ContiguousSetAge, HandRecursionOnThreeNodeLine) {
    Rates rates(1.0, 1.0, 3);
    // base 1/(3*(1/3)) = 1, then (1+0.5)/(2/3+1/2) = 9/7
    EXPECT_NEAR(contiguous_set_age(ContiguousSet(1, 2, line_segment(3)), rates), 9.0 / 7.0, 1e-12);
    auto ages = line_ages(3, rates);
    EXPECT_NEAR(ages[0], 69.0 / 35.0, 1e-12);
    EXPECT_NEAR(ages[1], 12.0 / 7.0, 1e-12);
    EXPECT_NEAR(ages[2], 69.0 / 35.0, 1e-12);
}

TEST(ContiguousSetAge, SingletonsMatchLineAges) {
    Rates rates(1.0, 1.0, 16);
    auto ages = line_ages(8, rates);
    for (std::int64_t i = 1; i <= 8; ++i)
        EXPECT_DOUBLE_EQ(contiguous_set_age(ContiguousSet(i, 1, line_segment(8)), rates),
                         ages[static_cast<std::size_t>(i - 1)]);
}

TEST(ContiguousSetAge, RejectsInvalidSets) {
    EXPECT_THROW(ContiguousSet(3, 2, line_segment(3)), std::invalid_argument);
    EXPECT_THROW(ContiguousSet(1, 4, line_segment(3)), std::invalid_argument);
    EXPECT_THROW(ContiguousSet(0, 1, line_segment(3)), std::invalid_argument);
}

// mirror of {j,..,j+k-1} about the axis between nodes i and i+1 is the set
// starting at 2i-j-k+2; sets leaning toward the corner age at least as much
// as their mirror
TEST(ContiguousSetAge, MirroredSetInequality) {
    for (std::int64_t n0 = 2; n0 <= 64; ++n0) {
        Rates rates(1.0, 1.0, n0);
        LineAgeTable table(n0, rates);
        for (std::int64_t i = 1; 2 * i <= n0; ++i) {
            for (std::int64_t k = 1; k <= 2 * i; ++k) {
                for (std::int64_t j = 1; 2 * (j - 1) <= 2 * i - k; ++j) {
                    std::int64_t mj = 2 * i - j - k + 2;
                    double direct = table.age(j, k);
                    double mirrored = table.age(mj, k);
                    ASSERT_LE(mirrored, direct + 1e-12 * direct)
                        << "n0=" << n0 << " i=" << i << " j=" << j << " k=" << k;
                }
            }
        }
    }
}

TEST(ContiguousSetAge, MirroredSetInequalityEmbedded) {
    Rates rates(1.0, 1.0, 128);
    LineAgeTable table(32, rates);
    for (std::int64_t i = 1; 2 * i <= 32; ++i)
        for (std::int64_t k = 1; k <= 2 * i; ++k)
            for (std::int64_t j = 1; 2 * (j - 1) <= 2 * i - k; ++j)
                ASSERT_LE(table.age(2 * i - j - k + 2, k), table.age(j, k) * (1.0 + 1e-12));
}

TEST(ContiguousSetAge, SupersetHasLowerAge) {
    for (std::int64_t n0 : {8, 24, 64}) {
        Rates rates(1.0, 1.0, 2 * n0);
        LineAgeTable table(n0, rates);
        for (std::int64_t k = 1; k < n0; ++k) {
            for (std::int64_t j = 1; j + k - 1 <= n0; ++j) {
                if (j > 1) {
                    ASSERT_LE(table.age(j - 1, k + 1), table.age(j, k) * (1.0 + 1e-12));
                }
                if (j + k - 1 < n0) {
                    ASSERT_LE(table.age(j, k + 1), table.age(j, k) * (1.0 + 1e-12));
                }
            }
        }
        auto profile = ring_age_profile(n0, rates);
        for (std::size_t k = 0; k + 1 < profile.size(); ++k)
            ASSERT_LE(profile[k + 1], profile[k] * (1.0 + 1e-12));
    }
}

TEST(ContiguousSetAge, RingLowerBoundsLine) {
    for (std::int64_t n : {64, 128}) {
        Rates rates(1.0, 1.0, n);
        for (std::int64_t n0 = 1; n0 <= 64; ++n0) {
            auto ages = line_ages(n0, rates);
            double ring = ring_node_age(n0, rates);
            EXPECT_LE(ring, *std::min_element(ages.begin(), ages.end()) + 1e-12);
        }
    }
}

TEST(Totals, MatchHandValues) {
    EXPECT_DOUBLE_EQ(ring_total_age(1, Rates(1.0, 1.0, 9)), 9.0);
    EXPECT_NEAR(ring_total_age(2, kUnit22), 8.0 / 3.0, 1e-12);
    EXPECT_NEAR(line_total_age(2, kUnit22), 3.0, 1e-12);
}

TEST(ProductTerm, SmallCases) {
    EXPECT_DOUBLE_EQ(product_term(0, 5), 1.0);
    EXPECT_NEAR(product_term(1, 1), 0.5, 1e-15);
    auto [lo, hi] = gaussian_bounds(1, 1);
    EXPECT_NEAR(lo, std::exp(-1.0), 1e-15);
    EXPECT_NEAR(hi, std::exp(-0.25), 1e-15);
    EXPECT_LE(lo, 0.5);
    EXPECT_LE(0.5, hi);
}

TEST(ProductTerm, LogSpaceValue) {
    // sum of log1p(k/1e4) for k<=100 is ~0.50331
    double logp = log_product_term(100, 10000);
    EXPECT_NEAR(logp, -0.505, 2e-3);
    auto [lo, hi] = gaussian_bounds(100, 10000);
    double p = product_term(100, 10000);
    EXPECT_LE(lo, p);
    EXPECT_LE(p, hi);
}

TEST(ProductTerm, GaussianBoundsHoldInLogSpace) {
    for (std::int64_t n : {10, 100, 10000}) {
        detail::CompensatedSum logp;
        for (std::int64_t j = 1; j <= n; ++j) {
            logp.add(-std::log1p(static_cast<double>(j) / static_cast<double>(n)));
            double jj = static_cast<double>(j) * static_cast<double>(j);
            ASSERT_LE(-jj / static_cast<double>(n), logp.value() + 1e-9);
            ASSERT_LE(logp.value(), -jj / (4.0 * static_cast<double>(n)) + 1e-9);
        }
    }
}

TEST(ProductTerm, UnderflowIsBenign) {
    double logp = log_product_term(10000, 10000);
    EXPECT_LT(logp, -3000.0);
    EXPECT_TRUE(std::isfinite(logp));
    EXPECT_EQ(product_term(10000, 10000), 0.0);
}

TEST(ProductTermSum, MatchesDirectLoop) {
    for (std::int64_t n : {5, 50}) {
        double direct = 0.0;
        for (std::int64_t j = 1; j <= n; ++j) direct += product_term(j, n);
        EXPECT_NEAR(product_term_sum(n, n), direct, 1e-12 * direct);
    }
}

TEST(Sandwich, HandValuesAndOrdering) {
    auto s = sandwich_check(2, kUnit22);
    EXPECT_NEAR(s.lower, 4.0 / 3.0, 1e-12);
    EXPECT_NEAR(s.line_max, 1.5, 1e-12);
    EXPECT_NEAR(s.upper, 8.0 / 3.0, 1e-12);

    auto t = sandwich_check(1, Rates(1.0, 1.0, 9));
    EXPECT_DOUBLE_EQ(t.lower, 9.0);
    EXPECT_DOUBLE_EQ(t.line_max, 9.0);
    EXPECT_DOUBLE_EQ(t.upper, 18.0);

    auto u = sandwich_check(64, Rates(1.0, 1.0, 1024));
    EXPECT_LE(u.lower, u.line_max);
    EXPECT_LE(u.line_max, u.upper);
}

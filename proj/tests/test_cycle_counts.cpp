#include <gtest/gtest.h>

#include "oracles.hpp"
#include "setwise/cycle_counts.hpp"

using namespace setwise;

TEST(CycleCounts, SmallCases)
{
    EXPECT_EQ(count_no_short_cycles(0, 1, Parity::even), 1);
    EXPECT_EQ(count_no_short_cycles(0, 1, Parity::odd), 0);
    EXPECT_EQ(count_no_short_cycles(2, 2, Parity::all), 0);
    // derangements of [4]: six 4-cycles (odd), three of type (2,2) (even)
    EXPECT_EQ(count_no_short_cycles(4, 1, Parity::even), 3);
    EXPECT_EQ(count_no_short_cycles(4, 1, Parity::odd), 6);
    EXPECT_EQ(count_no_short_cycles(5, 1, Parity::all), 44);
    EXPECT_THROW(count_no_short_cycles(-1, 1, Parity::all), InputError);
    EXPECT_THROW(count_no_short_cycles(4, 0, Parity::all), InputError);
}

TEST(CycleCounts, MatchBruteForce)
{
    for (int t = 1; t <= 3; ++t)
        for (int n = 0; n <= 9; ++n) {
            const auto [even, odd] = oracle::no_short_cycles_brute(n, t);
            EXPECT_EQ(count_no_short_cycles(n, t, Parity::even), even) << n << "," << t;
            EXPECT_EQ(count_no_short_cycles(n, t, Parity::odd), odd) << n << "," << t;
        }
}

TEST(CycleCounts, MatchClassSumsBeyondEnumeration)
{
    for (int t = 1; t <= 4; ++t)
        for (int n = 10; n <= 16; ++n) {
            Integer even = 0, odd = 0;
            for (const auto& mu : partitions_of(n)) {
                if (mu.parts().back() <= t) continue;
                (class_sign(mu) > 0 ? even : odd) += class_size(mu);
            }
            EXPECT_EQ(count_no_short_cycles(n, t, Parity::even), even) << n << "," << t;
            EXPECT_EQ(count_no_short_cycles(n, t, Parity::odd), odd) << n << "," << t;
        }
}

TEST(CycleCounts, DensityFloor)
{
    EXPECT_EQ(short_cycle_density_floor(1), Rational(2, 25));
    for (int t = 1; t <= 4; ++t)
        for (int n = 2 * t + 2; n <= 18; ++n) {
            const Integer m = std::min(count_no_short_cycles(n, t, Parity::even), count_no_short_cycles(n, t, Parity::odd));
            EXPECT_GE(Rational(m), short_cycle_density_floor(t) * Rational(factorial(n))) << n << "," << t;
        }
}

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zeck/fib_core.hpp"
#include "zeck/zeckendorf.hpp"

using namespace zeck;

TEST(Fib, SmallValues)
{
    EXPECT_EQ(fib(0), 0);
    EXPECT_EQ(fib(1), 1);
    EXPECT_EQ(fib(2), 1);
    EXPECT_EQ(fib(12), 144);
}

TEST(Fib, MatchesFreshRecurrence)
{
    for (int j : {50, 93, 94, 100, 500, 1000, 5000})
        EXPECT_EQ(fib(j), oracle::fib(j)) << "j=" << j;
    EXPECT_EQ(fib(100).get_str(), "354224848179261915075");
}

TEST(Fib, U64TableAgrees)
{
    for (int j = 0; j <= kMaxFibU64Index; ++j)
        EXPECT_EQ(from_u64(kFibU64[static_cast<std::size_t>(j)]), fib(j));
}

TEST(Fib, RecurrenceAndMonotone)
{
    for (int j = 2; j <= 3000; ++j) {
        ASSERT_EQ(fib(j + 1), fib(j) + fib(j - 1)) << j;
        if (j >= 3) {
            ASSERT_GT(fib(j), fib(j - 1)) << j;
        }
    }
}

TEST(Fib, RejectsNegative) { EXPECT_THROW(fib(-1), Error); }

TEST(Fib, ReferencesStayValidAcrossGrowth)
{
    const Natural& early = fib(10);
    reserve_fib(20000);
    EXPECT_EQ(early, 55);
    EXPECT_EQ(fib(20000), oracle::fib(20000));
}

TEST(Lucas, Values)
{
    EXPECT_EQ(lucas(0), 2);
    EXPECT_EQ(lucas(1), 1);
    EXPECT_EQ(lucas(4), 7);
    EXPECT_EQ(lucas(-3, true), -4);
    EXPECT_EQ(lucas(-4, true), 7);
    EXPECT_THROW(lucas(-3), Error);
}

TEST(Lucas, NegativeIndicesFollowBackwardRecurrence)
{
    // L_{n-2} = L_n - L_{n-1}, run from L_1, L_0 downwards.
    mpz_class hi = 1, lo = 2;
    for (int n = -1; n >= -60; --n) {
        mpz_class next = hi - lo;
        hi = lo;
        lo = next;
        ASSERT_EQ(lucas(n, true), lo) << n;
    }
}

TEST(Lucas, SumOfNeighbouringFibonacci)
{
    for (int k = 1; k <= 400; ++k) {
        ASSERT_EQ(lucas(k), fib(k - 1) + fib(k + 1)) << k;
        ASSERT_EQ(lucas(k), oracle::lucas(k)) << k;
    }
}

TEST(FibIndexAbove, Boundaries)
{
    EXPECT_EQ(fib_index_above(Natural(0)), 2);
    EXPECT_EQ(fib_index_above(Natural(1)), 3);
    EXPECT_EQ(fib_index_above(Natural(2)), 4);
    EXPECT_EQ(fib_index_above(fib(300)), 301);
    EXPECT_EQ(fib_index_above(fib(300) - 1), 300);
}

TEST(Constants, Values)
{
    const Constants& c = constants();
    EXPECT_NEAR(c.phi, 1.6180339887498949, 1e-15);
    EXPECT_NEAR(c.log_phi, 0.48121182505960347, 1e-15);
}

TEST(DigitIndexEstimate, SpecExamples)
{
    EXPECT_TRUE(digit_index_estimate(Natural(1)).contains(2));
    EXPECT_TRUE(digit_index_estimate(Natural(6)).contains(5));
    EXPECT_TRUE(digit_index_estimate(Natural(1000000)).contains(encode(Natural(1000000)).top_index()));
    EXPECT_THROW(digit_index_estimate(Natural(0)), Error);
}

TEST(DigitIndexEstimate, BracketsTheTopIndex)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int bits = 1 + static_cast<int>(rng() % 400);
        Natural x = 0;
        for (int b = 0; b < bits; b += 32)
            x = (x << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
        if (x == 0)
            x = 1;
        const IndexBracket br = digit_index_estimate(x);
        // Top index by scanning a fresh Fibonacci list.
        int top = 2;
        while (oracle::fib(top + 1) <= x)
            ++top;
        ASSERT_TRUE(br.contains(top)) << x.get_str() << " top=" << top << " bracket=" << br.lower << ".." << br.upper;
        ASSERT_LE(br.upper - br.lower, 2);
    }
}

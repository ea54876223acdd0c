#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zeck/fib_core.hpp"
#include "zeck/zeckendorf.hpp"

using namespace zeck;

namespace {

std::vector<int> ints(std::initializer_list<int> v) { return std::vector<int>(v); }

Natural random_natural(std::mt19937_64& rng, int max_bits)
{
    const int bits = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_bits));
    Natural x = 0;
    for (int b = 0; b < bits; b += 32)
        x = (x << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
    return x;
}

} // namespace

TEST(Encode, Examples)
{
    EXPECT_EQ(encode(Natural(6)).indices(), ints({2, 5}));
    EXPECT_EQ(encode(Natural(6)).to_digits(), "1001");
    EXPECT_EQ(encode(Natural(1)).indices(), ints({2}));
    EXPECT_TRUE(encode(Natural(0)).empty());
    EXPECT_EQ(encode(Natural(0)).to_digits(), "");
    EXPECT_EQ(encode(Natural(100)).indices(), *oracle::nonadjacent_subset(100));
}

TEST(Encode, MatchesExhaustiveSubsetSearch)
{
    for (std::uint64_t x = 1; x <= 400; ++x) {
        const auto expected = oracle::nonadjacent_subset(x);
        ASSERT_TRUE(expected.has_value()) << x;
        ASSERT_EQ(encode(from_u64(x)).indices(), *expected) << x;
    }
}

TEST(Encode, RejectsNegative) { EXPECT_THROW(encode(Natural(-5)), Error); }

TEST(Decode, Examples)
{
    EXPECT_EQ(decode(ZeckRep::from_indices({2, 5})), 6);
    EXPECT_EQ(decode(ZeckRep{}), 0);
    EXPECT_EQ(decode(ZeckRep::from_indices({4, 9, 11})), 126);
}

TEST(ZeckRep, Validation)
{
    EXPECT_THROW(ZeckRep::from_indices({1, 4}), Error);
    EXPECT_THROW(ZeckRep::from_indices({4, 5}), Error);
    EXPECT_THROW(ZeckRep::from_indices({4, 4}), Error);
    EXPECT_EQ(ZeckRep::from_indices({9, 2, 5}).indices(), ints({2, 5, 9}));
    EXPECT_EQ(ZeckRep::parse("0001001").indices(), ints({2, 5}));
    EXPECT_TRUE(ZeckRep::parse("").empty());
    EXPECT_THROW(ZeckRep::parse("0110"), Error);
    EXPECT_THROW(ZeckRep::parse("10201"), Error);
}

TEST(Encode, RoundTripAndValidityProperty)
{
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 3000; ++trial) {
        const Natural x = random_natural(rng, trial < 1500 ? 64 : 2000);
        const ZeckRep rep = encode(x);
        ASSERT_EQ(decode(rep), x);
        const auto& idx = rep.indices();
        for (std::size_t i = 1; i < idx.size(); ++i)
            ASSERT_GE(idx[i] - idx[i - 1], 2);
        if (!idx.empty()) {
            ASSERT_GE(idx.front(), 2);
            // at most floor(n/2) digits below top index n
            ASSERT_LE(rep.size(), static_cast<std::size_t>(rep.top_index() / 2));
        }
        ASSERT_EQ(sum_of_digits(x), oracle::digit_count(x));
        ASSERT_EQ(ZeckRep::parse(rep.to_digits()).indices(), idx);
    }
}

TEST(SumOfDigits, Examples)
{
    EXPECT_EQ(sum_of_digits(Natural(144)), 1u);
    EXPECT_EQ(sum_of_digits(Natural(6)), 2u);
    EXPECT_EQ(sum_of_digits(Natural(0)), 0u);
    const auto table = oracle::min_summands_table(10000);
    EXPECT_EQ(sum_of_digits(Natural(10000)), table[10000]);
}

TEST(SumOfDigits, U64OverloadAgrees)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::uint64_t x = rng() >> (rng() % 64);
        ASSERT_EQ(sum_of_digits(x), sum_of_digits(from_u64(x)));
    }
}

TEST(SumOfDigits, OfPowerMatchesBigArithmetic)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t n = 2 + rng() % 100000000ULL;
        const unsigned h = 1 + static_cast<unsigned>(rng() % 5);
        ASSERT_EQ(sum_of_digits_of_power(n, h), oracle::digit_count(oracle::pow(from_u64(n), h))) << n << "^" << h;
    }
}

TEST(MinimalCountOracle, AgreesWithGreedyAndTestDp)
{
    const auto table = oracle::min_summands_table(10000);
    EXPECT_EQ(minimal_count_oracle(8), 1u);
    EXPECT_EQ(minimal_count_oracle(6), 2u);
    for (std::uint64_t x = 1; x <= 10000; ++x) {
        ASSERT_EQ(minimal_count_oracle(x), table[x]) << x;
        ASSERT_EQ(sum_of_digits(x), table[x]) << x;
    }
    EXPECT_THROW(minimal_count_oracle(0), Error);
    EXPECT_THROW(minimal_count_oracle(kDefaultOracleCap + 1), Error);
}

TEST(SumOfDigits, SubadditiveNotSubmultiplicative)
{
    for (std::uint64_t a = 1; a <= 300; ++a)
        for (std::uint64_t b = 1; b <= 300; ++b)
            ASSERT_LE(sum_of_digits(a + b), sum_of_digits(a) + sum_of_digits(b));
    EXPECT_GT(sum_of_digits(std::uint64_t{6}), sum_of_digits(std::uint64_t{2}) * sum_of_digits(std::uint64_t{3}));
}

TEST(FibBlock, Basics)
{
    const FibBlock b("1001", 15);
    EXPECT_EQ(b.top_index(), 18);
    EXPECT_EQ(b.length(), 4u);
    EXPECT_EQ(b.ones(), 2u);
    EXPECT_EQ(b.one_indices(), ints({15, 18}));
    EXPECT_EQ(b.value(), fib(15) + fib(18));
    EXPECT_EQ(b.to_string(), "(1001)_15");
    EXPECT_THROW(FibBlock("0101", 3), Error);
    EXPECT_THROW(FibBlock("", 3), Error);
    EXPECT_THROW(FibBlock("101", 1), Error);
    EXPECT_THROW(FibBlock("1x1", 4), Error);
}

TEST(FromBlocks, Examples)
{
    EXPECT_EQ(from_blocks({FibBlock("101", 2)}), 4);
    EXPECT_EQ(from_blocks({FibBlock("10001", 2)}), 9);
    EXPECT_EQ(from_blocks({}), 0);
}

TEST(Noninterfering, Cases)
{
    EXPECT_TRUE(noninterfering({FibBlock("101", 10), FibBlock("101", 2)}));
    EXPECT_FALSE(noninterfering({FibBlock("101", 2), FibBlock("101", 2)}));
    // disjoint ranges but F_5 and F_6 adjacent
    EXPECT_FALSE(noninterfering({FibBlock("1", 6), FibBlock("101", 3)}));
    // overlapping ranges are rejected even if the ones interleave
    EXPECT_FALSE(noninterfering({FibBlock("10001", 2), FibBlock("1", 4)}));
    EXPECT_TRUE(noninterfering({FibBlock("1", 7), FibBlock("101", 3)}));
}

TEST(Noninterfering, ImpliesDigitSumIsOneCount)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<FibBlock> blocks;
        int offset = 2 + static_cast<int>(rng() % 3);
        const int count = 1 + static_cast<int>(rng() % 5);
        std::size_t ones = 0;
        for (int i = 0; i < count; ++i) {
            std::string digits = "1";
            const int len = static_cast<int>(rng() % 6);
            for (int d = 0; d < len; ++d)
                digits += (digits.back() == '0' && rng() % 2) ? '1' : '0';
            blocks.emplace_back(digits, offset);
            ones += blocks.back().ones();
            offset += static_cast<int>(digits.size()) + 1 + static_cast<int>(rng() % 3);
        }
        ASSERT_TRUE(noninterfering(blocks));
        ASSERT_EQ(sum_of_digits(from_blocks(blocks)), ones);
    }
}

#include <cmath>

#include <gtest/gtest.h>

#include "zeck/numeric.hpp"

using namespace zeck;

TEST(ParseNatural, AcceptsDigits)
{
    EXPECT_EQ(parse_natural("0"), 0);
    EXPECT_EQ(parse_natural("007"), 7);
    EXPECT_EQ(to_decimal(parse_natural("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(ParseNatural, RejectsMalformed)
{
    for (const char* bad : {"", "-1", "+3", "1e5", " 4", "0x10", "3.0"}) {
        try {
            parse_natural(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
        }
    }
}

TEST(ParseRational, Forms)
{
    EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("4"), Rational(4));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("1."), Error);
    EXPECT_THROW(parse_rational("-1/2"), Error);
}

TEST(U64, RoundTrip)
{
    const std::uint64_t big = ~std::uint64_t{0};
    EXPECT_TRUE(fits_u64(from_u64(big)));
    EXPECT_EQ(to_u64(from_u64(big)), big);
    EXPECT_FALSE(fits_u64(from_u64(big) + 1));
    EXPECT_THROW(to_u64(from_u64(big) + 1), Error);
}

TEST(Interval, LogEnclosesLibm)
{
    for (unsigned long x : {2ul, 3ul, 10ul, 1000ul, 123456789ul}) {
        const Interval i = Interval::log(Natural(x), 80);
        const double ref = std::log(static_cast<double>(x));
        EXPECT_LE(i.lower(), ref + 1e-12);
        EXPECT_GE(i.upper(), ref - 1e-12);
        // only widened by the outward conversion to double
        EXPECT_LT(i.upper() - i.lower(), 1e-13);
    }
}

TEST(Interval, LogPhiEncloses)
{
    const double ref = std::log((1 + std::sqrt(5.0)) / 2);
    const Interval i = Interval::log_phi(64);
    EXPECT_LE(i.lower(), ref);
    EXPECT_GE(i.upper(), ref);
}

TEST(Interval, ArithmeticKeepsEnclosure)
{
    const Interval a = Interval::of(Rational(1, 3), 64);
    const Interval b = Interval::of(-7L, 64);
    const Interval p = a * b;
    EXPECT_LE(p.lower(), -7.0 / 3);
    EXPECT_GE(p.upper(), -7.0 / 3);
    const Interval q = b / a;
    EXPECT_LE(q.lower(), -21.0);
    EXPECT_GE(q.upper(), -21.0);
    const Interval d = a - a;
    EXPECT_LE(d.lower(), 0.0);
    EXPECT_GE(d.upper(), 0.0);
}

TEST(CertifiedSign, DecidesCloseComparisons)
{
    // log(2^60) - 60 log 2 is exactly zero; 60 log 2 vs log(2^60 + 1) is tiny but positive.
    Natural p60;
    mpz_ui_pow_ui(p60.get_mpz_t(), 2, 60);
    const int s = certified_sign([&](mpfr_prec_t prec) {
        return Interval::log(p60 + 1, prec) - Interval::of(60L, prec) * Interval::log(Natural(2), prec);
    });
    EXPECT_EQ(s, 1);
    const int t = certified_sign([&](mpfr_prec_t prec) { return Interval::of(-3L, prec) + Interval::log(Natural(10), prec); });
    EXPECT_EQ(t, -1);
}

TEST(CertifiedSign, PointZeroAndHiddenZero)
{
    EXPECT_EQ(certified_sign([](mpfr_prec_t p) { return Interval::of(2L, p) - Interval::of(Rational(4, 2), p); }), 0);
    Natural p60;
    mpz_ui_pow_ui(p60.get_mpz_t(), 2, 60);
    try {
        certified_sign([&](mpfr_prec_t p) {
            return Interval::log(p60, p) - Interval::of(60L, p) * Interval::log(Natural(2), p);
        }, 64, 1024);
        ADD_FAILURE() << "a transcendental zero was decided";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Undecidable);
    }
}

TEST(CertifiedFloor, LogRatios)
{
    // floor(log 1000 / log 10) must be 3 even though the quotient is exactly 3.
    const Int f = certified_floor([](mpfr_prec_t p) {
        return Interval::log(Natural(1001), p) / Interval::log(Natural(10), p);
    });
    EXPECT_EQ(f, 3);
    const Int c = certified_ceil([](mpfr_prec_t p) { return Interval::log(Natural(999), p) / Interval::log(Natural(10), p); });
    EXPECT_EQ(c, 3);
}

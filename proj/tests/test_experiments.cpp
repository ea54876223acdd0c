#include <cmath>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "zeck/experiments.hpp"
#include "zeck/fib_core.hpp"

using namespace zeck;

TEST(Ratio, Examples)
{
    EXPECT_EQ(ratio(Natural(2), 2), Rational(2));
    EXPECT_EQ(ratio(Natural(8), 2), Rational(static_cast<long>(oracle::digit_count(64))));
    EXPECT_EQ(ratio(Natural(144), 2), Rational(static_cast<long>(oracle::digit_count(20736))));
    EXPECT_THROW(ratio(Natural(1), 2), Error);
}

TEST(RatioBounds, ScansPass)
{
    const ClaimReport single = scan_ratio_bounds(2, 2);
    EXPECT_EQ(single.status, ClaimStatus::Pass);
    EXPECT_EQ(single.cases, 1u);
    const ClaimReport r = scan_ratio_bounds(20000, 2);
    EXPECT_EQ(r.status, ClaimStatus::Pass);
    EXPECT_EQ(r.cases, 19999u);
    EXPECT_THROW(scan_ratio_bounds(1, 2), Error);
}

TEST(RatioBounds, MatchesFloatingPointOracle)
{
    // Ratios at least 1e-9 away from either bound are decided identically in long double.
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        const long double a = static_cast<long double>(oracle::digit_count(oracle::pow(mpz_class(static_cast<unsigned long>(n)), 3)));
        const long double b = static_cast<long double>(oracle::digit_count(mpz_class(static_cast<unsigned long>(n))));
        const long double ln = std::log(static_cast<long double>(n));
        ASSERT_GE(a / b - 0.5L / ln, 0.0L) << n;
        ASSERT_GE(6.0L * ln - a / b, 0.0L) << n;
    }
    EXPECT_EQ(scan_ratio_bounds(3000, 3).status, ClaimStatus::Pass);
}

TEST(LemmaExpand, SpecExamples)
{
    // k=3, z=2, l=1: s_F(F_7 - 2) = s_F(11) = 2 = 3 - 1 + s_F(F_3 - 2)
    EXPECT_EQ(sum_of_digits(fib(7) - 2), 2u);
    EXPECT_EQ(sum_of_digits(fib(3) - 2), 0u);
    EXPECT_EQ(sum_of_digits(fib(9) - 34), 0u);
}

TEST(LemmaExpand, BothPartsPass)
{
    const auto reports = verify_lemma_expand(12);
    ASSERT_EQ(reports.size(), 2u);
    for (const auto& r : reports)
        EXPECT_EQ(r.status, ClaimStatus::Pass) << r.claim_id;
    // Part (i) sees every z in 1..F_{2k+1} for each k.
    std::uint64_t total = 0;
    for (int k = 1; k <= 12; ++k)
        total += oracle::fib(2 * k + 1).get_ui();
    EXPECT_EQ(reports[0].cases + std::stoull(reports[0].observed.at("inadmissible_z")), total);
}

TEST(LemmaExpand, EqualityOracleOnGrid)
{
    // Independent evaluation of part (i) for k <= 8.
    for (int k = 1; k <= 8; ++k) {
        const std::uint64_t top = oracle::fib(2 * k + 1).get_ui();
        for (std::uint64_t z = 1; z <= top; ++z) {
            for (int l = 0; l <= k; ++l) {
                if (oracle::fib(2 * l) < z && z <= oracle::fib(2 * l + 1)) {
                    const std::size_t lhs = oracle::digit_count(top - z);
                    const std::size_t rhs = static_cast<std::size_t>(k - l) + oracle::digit_count(oracle::fib(2 * l + 1) - z);
                    ASSERT_EQ(lhs, rhs) << k << "," << z;
                }
            }
        }
    }
}

TEST(Counting, TrivialThresholds)
{
    const CountResult all_small = count_small_ratio(10000, 2, Rational(1000));
    EXPECT_EQ(all_small.count, 9998u);
    const CountResult all_large = count_large_ratio(10000, 2, Rational(0));
    EXPECT_EQ(all_large.count, 9998u);
    const CountResult eps1 = count_small_ratio(10000, 2, Rational(1));
    ASSERT_TRUE(eps1.count);
    EXPECT_GE(*eps1.count, eps1.constructed);
}

TEST(Counting, MatchesTestSideEnumeration)
{
    std::uint64_t small = 0, large = 0;
    for (std::uint64_t n = 2; n < 5000; ++n) {
        const std::size_t a = oracle::digit_count(oracle::pow(mpz_class(static_cast<unsigned long>(n)), 2));
        const std::size_t b = oracle::digit_count(mpz_class(static_cast<unsigned long>(n)));
        small += 2 * a < b ? 1 : 0;
        large += a > 3 * b ? 1 : 0;
    }
    EXPECT_EQ(count_small_ratio(5000, 2, Rational(1, 2)).count, small);
    EXPECT_EQ(count_large_ratio(5000, 2, Rational(3)).count, large);
}

TEST(Counting, MonotoneInThreshold)
{
    std::uint64_t prev = 0;
    for (long num : {1L, 2L, 3L, 4L, 6L, 8L}) {
        const auto c = count_small_ratio(20000, 2, Rational(num, 4));
        ASSERT_GE(*c.count, prev);
        prev = *c.count;
    }
    prev = ~std::uint64_t{0};
    for (long d : {0L, 1L, 2L, 3L, 4L, 5L}) {
        const auto c = count_large_ratio(20000, 2, Rational(d));
        ASSERT_LE(*c.count, prev);
        prev = *c.count;
    }
}

TEST(Counting, GoldenValues)
{
    const CountResult small = count_small_ratio(100000, 2, Rational(1, 2));
    EXPECT_EQ(small.count, 2u);
    EXPECT_EQ(small.constructed, 0u);
    const CountResult large = count_large_ratio(100000, 2, Rational(4));
    EXPECT_EQ(large.count, 674u);
    EXPECT_EQ(large.constructed, 251u);
}

TEST(Counting, ReportStatuses)
{
    EXPECT_EQ(verify_count_small(100000, 2, Rational(1, 2), 1).status, ClaimStatus::BelowThreshold);
    const ClaimReport large = verify_count_large(100000, 2, Rational(4), 1);
    EXPECT_EQ(large.status, ClaimStatus::Pass);
    EXPECT_EQ(large.observed.at("count"), "674");
    EXPECT_EQ(large.observed.at("constructed"), "251");
}

TEST(Reports, FailCarriesWitness)
{
    WitnessLog log;
    log.pass([] { return Witness{"a", "b", "c"}; });
    log.fail({"x=1", "1", "2"});
    ClaimReport r;
    log.finish(r);
    EXPECT_EQ(r.status, ClaimStatus::Fail);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0].input, "x=1");
    EXPECT_EQ(r.cases, 2u);
}

TEST(Reports, MergeEqualsSerial)
{
    WitnessLog serial, a, b;
    for (int i = 0; i < 50; ++i) {
        auto& part = i < 25 ? a : b;
        Witness w{std::to_string(i), "e", "a"};
        if (i % 7 == 3) {
            serial.fail(w);
            part.fail(w);
        } else {
            serial.pass([&] { return w; });
            part.pass([&] { return w; });
        }
    }
    a.merge(std::move(b));
    ClaimReport r1, r2;
    serial.finish(r1);
    a.finish(r2);
    EXPECT_EQ(reports_to_json({r1}), reports_to_json({r2}));
}

TEST(Reports, JsonSchemaAndDeterminism)
{
    Params p;
    const auto first = run_target("squares", p);
    const std::string json = reports_to_json(first);
    EXPECT_EQ(json, reports_to_json(run_target("squares", p)));
    const auto doc = nlohmann::json::parse(json);
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 2u);
    EXPECT_EQ(doc[0]["claim_id"], "sF-nk2-eq-26");
    EXPECT_EQ(doc[0]["status"], "pass");
    EXPECT_EQ(doc[0]["range_tested"]["min"], 7);
    EXPECT_EQ(doc[0]["range_tested"]["max"], 40);
    const std::vector<std::string> keys{"claim_id", "status", "params", "range_tested", "cases", "failures",
                                        "discovered_thresholds", "observed", "witnesses"};
    std::vector<std::string> seen;
    const auto ordered = nlohmann::ordered_json::parse(json);
    for (const auto& [k, v] : ordered[0].items())
        seen.push_back(k);
    EXPECT_EQ(seen, keys);
}

TEST(Reports, CsvOneRowPerWitness)
{
    const auto reports = run_target("fibcoro", Params{});
    const std::string csv = reports_to_csv(reports);
    std::size_t rows = 0, witnesses = 0;
    for (char c : csv)
        rows += c == '\n' ? 1 : 0;
    for (const auto& r : reports)
        witnesses += r.witnesses.size();
    EXPECT_EQ(rows, witnesses + 1);
    EXPECT_EQ(csv.rfind("claim_id,status,input,expected,actual\n", 0), 0u);
}

TEST(Reports, JobsDoNotChangeOutput)
{
    Params p1, p4;
    p4.jobs = 4;
    p1.n_max = p4.n_max = 20000;
    EXPECT_EQ(reports_to_json(run_target("thm2-bounds", p1)), reports_to_json(run_target("thm2-bounds", p4)));
    EXPECT_EQ(reports_to_json(run_target("lemma-expand", p1)), reports_to_json(run_target("lemma-expand", p4)));
    EXPECT_EQ(ratio_table_to_string(ratio_table(2, 5000, 2, 1), 2, Format::Csv),
              ratio_table_to_string(ratio_table(2, 5000, 2, 3), 2, Format::Csv));
}

TEST(Targets, UnknownClaimAndRanges)
{
    try {
        run_target("nonsense", Params{});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownClaim);
    }
    Params bad;
    bad.k_min = 10;
    bad.k_max = 5;
    EXPECT_THROW(run_target("linear", bad), Error);
}

TEST(Targets, OverridesApply)
{
    Params p;
    p.k_min = 7;
    p.k_max = 12;
    const auto r = run_target("squares", p);
    EXPECT_EQ(r[0].range_tested.max, 12);
    EXPECT_EQ(r[1].range_tested.max, 12);
    EXPECT_EQ(r[0].cases, 6u);
}

TEST(Targets, RegistryNamesRun)
{
    for (const auto& t : verification_targets())
        EXPECT_FALSE(t.summary.empty()) << t.name;
    Params p;
    p.n_max = 200;
    EXPECT_EQ(run_target("minimality", p).front().status, ClaimStatus::Pass);
}

TEST(MembersTable, Formats)
{
    const std::vector<FamilyMember> m{lower_family(7)};
    const std::string csv = members_to_string(m, 3, Format::Csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "family,k,m,n,sF_n,sF_n2,sF_n3");
    EXPECT_NE(csv.find(",13,26,"), std::string::npos);
    const auto doc = nlohmann::json::parse(members_to_string(m, 2, Format::Json));
    EXPECT_EQ(doc[0]["sF_nh"]["2"], 26);
    EXPECT_EQ(doc[0]["n"], lower_family(7).n.get_str());
}

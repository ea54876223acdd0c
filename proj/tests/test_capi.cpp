#include <cstring>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "zeck/zeck.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    zk_string_free(s);
    return out;
}

zk_natural* nat(const char* text)
{
    zk_natural* n = nullptr;
    EXPECT_EQ(zk_natural_parse(text, &n), ZK_OK);
    return n;
}

} // namespace

TEST(CApi, VersionAndNames)
{
    EXPECT_STREQ(zk_version(), "0.1.0");
    EXPECT_STREQ(zk_status_name(ZK_OK), "ok");
    EXPECT_STREQ(zk_status_name(ZK_ERR_UNKNOWN_CLAIM), "unknown claim");
}

TEST(CApi, NullArguments)
{
    zk_natural* n = nullptr;
    EXPECT_EQ(zk_natural_parse(nullptr, &n), ZK_ERR_NULL_ARGUMENT);
    EXPECT_EQ(zk_natural_parse("5", nullptr), ZK_ERR_NULL_ARGUMENT);
    EXPECT_NE(std::string(zk_last_error_message()).find("NULL"), std::string::npos);
    uint64_t v = 0;
    EXPECT_EQ(zk_sf(nullptr, &v), ZK_ERR_NULL_ARGUMENT);
    zk_natural_free(nullptr);
    zk_form_free(nullptr);
    zk_member_free(nullptr);
    zk_report_set_free(nullptr);
    zk_string_free(nullptr);
}

TEST(CApi, ParseErrors)
{
    zk_natural* n = nullptr;
    EXPECT_EQ(zk_natural_parse("12a", &n), ZK_ERR_PARSE);
    EXPECT_EQ(n, nullptr);
    EXPECT_EQ(zk_decode_digits("0110", &n), ZK_ERR_PARSE);
    EXPECT_EQ(zk_natural_parse("42", &n), ZK_OK);
    EXPECT_STREQ(zk_last_error_message(), "");
    zk_natural_free(n);
}

TEST(CApi, EncodeBufferProtocol)
{
    zk_natural* six = nat("6");
    size_t count = 0;
    EXPECT_EQ(zk_encode(six, nullptr, 0, &count), ZK_ERR_BUFFER_TOO_SMALL);
    EXPECT_EQ(count, 2u);
    int idx[2] = {0, 0};
    EXPECT_EQ(zk_encode(six, idx, 2, &count), ZK_OK);
    EXPECT_EQ(idx[0], 5);
    EXPECT_EQ(idx[1], 2);
    char* digits = nullptr;
    ASSERT_EQ(zk_encode_digits(six, &digits), ZK_OK);
    EXPECT_EQ(take(digits), "1001");
    uint64_t sf = 0;
    EXPECT_EQ(zk_sf(six, &sf), ZK_OK);
    EXPECT_EQ(sf, 2u);
    zk_natural_free(six);

    zk_natural* zero = nat("0");
    EXPECT_EQ(zk_encode(zero, nullptr, 0, &count), ZK_OK);
    EXPECT_EQ(count, 0u);
    zk_natural_free(zero);
}

TEST(CApi, DecodeRoundTrip)
{
    const int idx[] = {11, 9, 4};
    zk_natural* n = nullptr;
    ASSERT_EQ(zk_decode_indices(idx, 3, &n), ZK_OK);
    char* s = nullptr;
    ASSERT_EQ(zk_natural_to_string(n, &s), ZK_OK);
    EXPECT_EQ(take(s), "126");
    zk_natural_free(n);
    const int bad[] = {5, 4};
    EXPECT_EQ(zk_decode_indices(bad, 2, &n), ZK_ERR_INVALID_ARGUMENT);
}

TEST(CApi, FibLucas)
{
    char* s = nullptr;
    ASSERT_EQ(zk_fib(100, &s), ZK_OK);
    EXPECT_EQ(take(s), "354224848179261915075");
    ASSERT_EQ(zk_lucas(-3, &s), ZK_OK);
    EXPECT_EQ(take(s), "-4");
    EXPECT_EQ(zk_fib(-1, &s), ZK_ERR_INVALID_ARGUMENT);
    unsigned m = 0;
    EXPECT_EQ(zk_minimal_count(6, &m), ZK_OK);
    EXPECT_EQ(m, 2u);
    EXPECT_EQ(zk_minimal_count(0, &m), ZK_ERR_OUT_OF_RANGE);
    zk_natural* x = nat("1000000");
    int lo = 0, hi = 0;
    EXPECT_EQ(zk_digit_index_estimate(x, &lo, &hi), ZK_OK);
    EXPECT_LE(lo, 30);
    EXPECT_GE(hi, 30);
    zk_natural_free(x);
}

TEST(CApi, Forms)
{
    zk_member* member = nullptr;
    ASSERT_EQ(zk_member_create(ZK_FAMILY_LOWER, nullptr, 1, &member), ZK_OK);
    zk_form* f = nullptr;
    ASSERT_EQ(zk_member_form(member, &f), ZK_OK);
    zk_form* sq = nullptr;
    ASSERT_EQ(zk_form_pow(f, 2, &sq), ZK_OK);
    char* text = nullptr;
    ASSERT_EQ(zk_form_to_string(sq, &text), ZK_OK);
    EXPECT_EQ(take(text), "L16+2·L14+3·L12+4·L10+L8+2·L6+3·L4+4·L2+9");
    zk_natural* v = nullptr;
    ASSERT_EQ(zk_form_value(sq, &v), ZK_OK);
    char* s = nullptr;
    ASSERT_EQ(zk_natural_to_string(v, &s), ZK_OK);
    EXPECT_EQ(take(s), "5476");
    zk_natural_free(v);

    zk_form* a = nullptr;
    zk_form* b = nullptr;
    zk_form* ab = nullptr;
    ASSERT_EQ(zk_form_lucas(3, &a), ZK_OK);
    ASSERT_EQ(zk_form_lucas(3, &b), ZK_OK);
    ASSERT_EQ(zk_form_mul(a, b, &ab), ZK_OK);
    ASSERT_EQ(zk_form_to_string(ab, &text), ZK_OK);
    EXPECT_EQ(take(text), "L6-2");
    uint64_t sf = 0;
    ASSERT_EQ(zk_form_sf(ab, &sf), ZK_OK);
    EXPECT_EQ(sf, 2u);

    zk_form* direct = nullptr;
    ASSERT_EQ(zk_form_power_direct(3, 2, &direct), ZK_OK);
    ASSERT_EQ(zk_form_to_string(direct, &text), ZK_OK);
    EXPECT_EQ(take(text), "L6-2");

    for (zk_form* x : {f, sq, a, b, ab, direct})
        zk_form_free(x);
    zk_member_free(member);
}

TEST(CApi, MultipleToBlocks)
{
    zk_natural* four = nat("4");
    char* text = nullptr;
    ASSERT_EQ(zk_multiple_to_blocks(four, 20, &text), ZK_OK);
    EXPECT_EQ(take(text), "(1001001001)_15");
    EXPECT_EQ(zk_multiple_to_blocks(four, 3, &text), ZK_ERR_INTERFERING);
    zk_natural_free(four);
}

TEST(CApi, Members)
{
    zk_member* m = nullptr;
    EXPECT_EQ(zk_member_create(ZK_FAMILY_THM5, nullptr, 3, &m), ZK_ERR_NULL_ARGUMENT);
    zk_natural* three = nat("3");
    ASSERT_EQ(zk_member_create(ZK_FAMILY_THM5, three, 20, &m), ZK_OK);
    zk_natural* n = nullptr;
    ASSERT_EQ(zk_member_n(m, &n), ZK_OK);
    char* lucas39 = nullptr;
    ASSERT_EQ(zk_lucas(39, &lucas39), ZK_OK);
    char* s = nullptr;
    ASSERT_EQ(zk_natural_to_string(n, &s), ZK_OK);
    EXPECT_EQ(take(s), std::to_string(3 * std::stoull(take(lucas39))));
    char* csv = nullptr;
    ASSERT_EQ(zk_member_render(m, 2, ZK_FORMAT_CSV, &csv), ZK_OK);
    EXPECT_EQ(take(csv).rfind("family,k,m,n,sF_n,sF_n2\nthm5,20,3,", 0), 0u);
    zk_natural_free(n);
    zk_natural_free(three);
    zk_member_free(m);

    zk_family fam;
    EXPECT_EQ(zk_family_parse("upper", &fam), ZK_OK);
    EXPECT_EQ(fam, ZK_FAMILY_UPPER);
    EXPECT_EQ(zk_family_parse("nope", &fam), ZK_ERR_INVALID_ARGUMENT);

    EXPECT_EQ(zk_fibcoro_witness(5, 2, &m), ZK_ERR_BELOW_THRESHOLD);
    ASSERT_EQ(zk_fibcoro_witness(13, 2, &m), ZK_OK);
    ASSERT_EQ(zk_member_n(m, &n), ZK_OK);
    uint64_t sf = 0;
    ASSERT_EQ(zk_sf(n, &sf), ZK_OK);
    EXPECT_EQ(sf, 13u);
    zk_natural_free(n);
    zk_member_free(m);

    char* table = nullptr;
    ASSERT_EQ(zk_family_table(ZK_FAMILY_LOWER, nullptr, 7, 9, 2, ZK_FORMAT_CSV, &table), ZK_OK);
    const std::string t = take(table);
    EXPECT_NE(t.find("lower,7,1,"), std::string::npos);
    EXPECT_NE(t.find("lower,9,1,"), std::string::npos);
    EXPECT_EQ(zk_family_table(ZK_FAMILY_LOWER, nullptr, 9, 7, 2, ZK_FORMAT_CSV, &table), ZK_ERR_OUT_OF_RANGE);
}

TEST(CApi, Verify)
{
    zk_params p;
    zk_params_init(&p);
    p.k_min = 7;
    p.k_max = 40;
    zk_report_set* set = nullptr;
    ASSERT_EQ(zk_verify("squares", &p, &set), ZK_OK);
    EXPECT_EQ(zk_report_set_size(set), 2u);
    EXPECT_EQ(zk_report_set_failed(set), 0u);
    char* json = nullptr;
    ASSERT_EQ(zk_report_set_render(set, ZK_FORMAT_JSON, &json), ZK_OK);
    EXPECT_NE(take(json).find("\"claim_id\": \"sF-nk2-eq-26\""), std::string::npos);
    zk_report_set_free(set);

    EXPECT_EQ(zk_verify("bogus", &p, &set), ZK_ERR_UNKNOWN_CLAIM);
    zk_params_init(&p);
    p.eps = "1/0";
    EXPECT_EQ(zk_verify("count-small", &p, &set), ZK_ERR_PARSE);
    EXPECT_NE(std::string(zk_verify_targets()).find("lemma-expand"), std::string::npos);
}

TEST(CApi, RatioAndScan)
{
    zk_natural* two = nat("2");
    char* r = nullptr;
    ASSERT_EQ(zk_ratio(two, 2, &r), ZK_OK);
    EXPECT_EQ(take(r), "2");
    zk_natural_free(two);
    char* csv = nullptr;
    ASSERT_EQ(zk_scan(2, 4, 2, 1, ZK_FORMAT_CSV, &csv), ZK_OK);
    EXPECT_EQ(take(csv), "n,h,sF_n,sF_nh,ratio\n2,2,1,2,2.000000\n3,2,1,2,2.000000\n4,2,2,2,1.000000\n");
}

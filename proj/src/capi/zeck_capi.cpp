#include "zeck/zeck.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "zeck/constructions.hpp"
#include "zeck/experiments.hpp"
#include "zeck/fib_core.hpp"
#include "zeck/lucas_algebra.hpp"
#include "zeck/zeckendorf.hpp"

struct zk_natural {
    zeck::Natural value;
};

struct zk_form {
    zeck::LucasForm value;
};

struct zk_member {
    zeck::FamilyMember value;
};

struct zk_report_set {
    std::vector<zeck::ClaimReport> reports;
};

namespace {

thread_local std::string last_error;

zk_status set_error(zk_status status, const std::string& message)
{
    last_error = message;
    return status;
}

zk_status map_code(zeck::ErrorCode code)
{
    switch (code) {
    case zeck::ErrorCode::InvalidArgument:
        return ZK_ERR_INVALID_ARGUMENT;
    case zeck::ErrorCode::OutOfRange:
        return ZK_ERR_OUT_OF_RANGE;
    case zeck::ErrorCode::Interfering:
        return ZK_ERR_INTERFERING;
    case zeck::ErrorCode::BelowThreshold:
        return ZK_ERR_BELOW_THRESHOLD;
    case zeck::ErrorCode::Defect:
        return ZK_ERR_DEFECT;
    case zeck::ErrorCode::UnknownClaim:
        return ZK_ERR_UNKNOWN_CLAIM;
    case zeck::ErrorCode::Undecidable:
        return ZK_ERR_UNDECIDABLE;
    }
    return ZK_ERR_INTERNAL;
}

template <typename Fn>
zk_status guarded(Fn&& fn)
{
    try {
        last_error.clear();
        return fn();
    } catch (const zeck::Error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(ZK_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(ZK_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(ZK_ERR_INTERNAL, "unknown exception");
    }
}

zk_status null_arg(const char* name)
{
    return set_error(ZK_ERR_NULL_ARGUMENT, std::string(name) + " is NULL");
}

#define ZK_REQUIRE(ptr)          \
    do {                         \
        if ((ptr) == nullptr)    \
            return null_arg(#ptr); \
    } while (0)

char* dup_string(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

zeck::Format to_format(zk_format format)
{
    switch (format) {
    case ZK_FORMAT_TEXT:
        return zeck::Format::Text;
    case ZK_FORMAT_JSON:
        return zeck::Format::Json;
    case ZK_FORMAT_CSV:
        return zeck::Format::Csv;
    }
    throw zeck::Error(zeck::ErrorCode::InvalidArgument, "unknown output format");
}

zeck::Family to_family(zk_family family)
{
    switch (family) {
    case ZK_FAMILY_UPPER:
        return zeck::Family::Upper;
    case ZK_FAMILY_LOWER:
        return zeck::Family::Lower;
    case ZK_FAMILY_THM4:
        return zeck::Family::Thm4;
    case ZK_FAMILY_THM5:
        return zeck::Family::Thm5;
    }
    throw zeck::Error(zeck::ErrorCode::InvalidArgument, "unknown family");
}

zk_natural* wrap(zeck::Natural n) { return new zk_natural{std::move(n)}; }

} // namespace

extern "C" {

const char* zk_version(void) { return "0.1.0"; }

const char* zk_status_name(zk_status status)
{
    switch (status) {
    case ZK_OK:
        return "ok";
    case ZK_ERR_NULL_ARGUMENT:
        return "null argument";
    case ZK_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case ZK_ERR_PARSE:
        return "parse error";
    case ZK_ERR_OUT_OF_RANGE:
        return "out of range";
    case ZK_ERR_INTERFERING:
        return "interfering";
    case ZK_ERR_BELOW_THRESHOLD:
        return "below threshold";
    case ZK_ERR_DEFECT:
        return "defect";
    case ZK_ERR_UNKNOWN_CLAIM:
        return "unknown claim";
    case ZK_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case ZK_ERR_UNDECIDABLE:
        return "undecidable";
    case ZK_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* zk_last_error_message(void) { return last_error.c_str(); }

void zk_string_free(char* s) { std::free(s); }

// --- naturals ---------------------------------------------------------------

zk_status zk_natural_parse(const char* decimal, zk_natural** out)
{
    ZK_REQUIRE(decimal);
    ZK_REQUIRE(out);
    return guarded([&] {
        try {
            *out = wrap(zeck::parse_natural(decimal));
        } catch (const zeck::Error& e) {
            return set_error(ZK_ERR_PARSE, e.what());
        }
        return ZK_OK;
    });
}

zk_status zk_natural_from_u64(uint64_t value, zk_natural** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = wrap(zeck::from_u64(value));
        return ZK_OK;
    });
}

zk_status zk_natural_pow(const zk_natural* base, unsigned exponent, zk_natural** out)
{
    ZK_REQUIRE(base);
    ZK_REQUIRE(out);
    return guarded([&] {
        zeck::Natural r;
        mpz_pow_ui(r.get_mpz_t(), base->value.get_mpz_t(), exponent);
        *out = wrap(std::move(r));
        return ZK_OK;
    });
}

zk_status zk_natural_to_string(const zk_natural* n, char** out)
{
    ZK_REQUIRE(n);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(zeck::to_decimal(n->value));
        return ZK_OK;
    });
}

void zk_natural_free(zk_natural* n) { delete n; }

// --- Fibonacci and Lucas ----------------------------------------------------

zk_status zk_fib(int j, char** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(zeck::to_decimal(zeck::fib(j)));
        return ZK_OK;
    });
}

zk_status zk_lucas(int k, char** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(zeck::to_decimal(zeck::lucas(k, true)));
        return ZK_OK;
    });
}

zk_status zk_digit_index_estimate(const zk_natural* x, int* lower, int* upper)
{
    ZK_REQUIRE(x);
    ZK_REQUIRE(lower);
    ZK_REQUIRE(upper);
    return guarded([&] {
        const auto b = zeck::digit_index_estimate(x->value);
        *lower = b.lower;
        *upper = b.upper;
        return ZK_OK;
    });
}

// --- Zeckendorf -------------------------------------------------------------

zk_status zk_encode(const zk_natural* x, int* indices, size_t capacity, size_t* count)
{
    ZK_REQUIRE(x);
    ZK_REQUIRE(count);
    return guarded([&] {
        const auto rep = zeck::encode(x->value);
        const auto& idx = rep.indices();
        *count = idx.size();
        if (capacity < idx.size())
            return set_error(ZK_ERR_BUFFER_TOO_SMALL, "need room for " + std::to_string(idx.size()) + " indices");
        if (!idx.empty() && indices == nullptr)
            return null_arg("indices");
        for (size_t i = 0; i < idx.size(); ++i)
            indices[i] = idx[idx.size() - 1 - i];
        return ZK_OK;
    });
}

zk_status zk_encode_digits(const zk_natural* x, char** out)
{
    ZK_REQUIRE(x);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(zeck::encode(x->value).to_digits());
        return ZK_OK;
    });
}

zk_status zk_decode_digits(const char* digits, zk_natural** out)
{
    ZK_REQUIRE(digits);
    ZK_REQUIRE(out);
    return guarded([&] {
        zeck::ZeckRep rep;
        try {
            rep = zeck::ZeckRep::parse(digits);
        } catch (const zeck::Error& e) {
            return set_error(ZK_ERR_PARSE, e.what());
        }
        *out = wrap(zeck::decode(rep));
        return ZK_OK;
    });
}

zk_status zk_decode_indices(const int* indices, size_t count, zk_natural** out)
{
    ZK_REQUIRE(out);
    if (count > 0)
        ZK_REQUIRE(indices);
    return guarded([&] {
        std::vector<int> idx(indices, indices + count);
        *out = wrap(zeck::decode(zeck::ZeckRep::from_indices(std::move(idx))));
        return ZK_OK;
    });
}

zk_status zk_sf(const zk_natural* x, uint64_t* out)
{
    ZK_REQUIRE(x);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = zeck::sum_of_digits(x->value);
        return ZK_OK;
    });
}

zk_status zk_minimal_count(uint64_t x, unsigned* out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = zeck::minimal_count_oracle(x);
        return ZK_OK;
    });
}

// --- Lucas forms ------------------------------------------------------------

zk_status zk_form_lucas(int k, zk_form** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = new zk_form{zeck::LucasForm::lucas(k)};
        return ZK_OK;
    });
}

zk_status zk_form_mul(const zk_form* a, const zk_form* b, zk_form** out)
{
    ZK_REQUIRE(a);
    ZK_REQUIRE(b);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = new zk_form{a->value * b->value};
        return ZK_OK;
    });
}

zk_status zk_form_pow(const zk_form* f, unsigned h, zk_form** out)
{
    ZK_REQUIRE(f);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = new zk_form{zeck::pow(f->value, h)};
        return ZK_OK;
    });
}

zk_status zk_form_power_direct(int k, unsigned h, zk_form** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = new zk_form{zeck::lucas_power_direct(k, h)};
        return ZK_OK;
    });
}

zk_status zk_form_value(const zk_form* f, zk_natural** out)
{
    ZK_REQUIRE(f);
    ZK_REQUIRE(out);
    return guarded([&] {
        zeck::Int v = f->value.value();
        if (sgn(v) < 0)
            return set_error(ZK_ERR_OUT_OF_RANGE, "form value is negative: " + v.get_str());
        *out = wrap(std::move(v));
        return ZK_OK;
    });
}

zk_status zk_form_to_string(const zk_form* f, char** out)
{
    ZK_REQUIRE(f);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(f->value.to_string());
        return ZK_OK;
    });
}

zk_status zk_form_sf(const zk_form* f, uint64_t* out)
{
    ZK_REQUIRE(f);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = zeck::sum_of_digits(f->value);
        return ZK_OK;
    });
}

void zk_form_free(zk_form* f) { delete f; }

zk_status zk_multiple_to_blocks(const zk_natural* m, int k, char** out)
{
    ZK_REQUIRE(m);
    ZK_REQUIRE(out);
    return guarded([&] {
        std::string text;
        for (const auto& b : zeck::multiple_to_blocks(m->value, k))
            text += (text.empty() ? "" : " + ") + b.to_string();
        *out = dup_string(text);
        return ZK_OK;
    });
}

// --- family members ---------------------------------------------------------

zk_status zk_family_parse(const char* name, zk_family* out)
{
    ZK_REQUIRE(name);
    ZK_REQUIRE(out);
    return guarded([&] {
        switch (zeck::parse_family(name)) {
        case zeck::Family::Upper:
            *out = ZK_FAMILY_UPPER;
            break;
        case zeck::Family::Lower:
            *out = ZK_FAMILY_LOWER;
            break;
        case zeck::Family::Thm4:
            *out = ZK_FAMILY_THM4;
            break;
        case zeck::Family::Thm5:
            *out = ZK_FAMILY_THM5;
            break;
        }
        return ZK_OK;
    });
}

zk_status zk_member_create(zk_family family, const zk_natural* m, int k, zk_member** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        const zeck::Family f = to_family(family);
        const bool multiplied = f == zeck::Family::Thm4 || f == zeck::Family::Thm5;
        if (multiplied && m == nullptr)
            return null_arg("m");
        const zeck::Natural mult = multiplied ? m->value : zeck::Natural(1);
        *out = new zk_member{zeck::make_member(f, mult, k)};
        return ZK_OK;
    });
}

zk_status zk_member_n(const zk_member* member, zk_natural** out)
{
    ZK_REQUIRE(member);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = wrap(member->value.n);
        return ZK_OK;
    });
}

zk_status zk_member_form(const zk_member* member, zk_form** out)
{
    ZK_REQUIRE(member);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = new zk_form{member->value.form};
        return ZK_OK;
    });
}

zk_status zk_member_render(const zk_member* member, unsigned h_max, zk_format format, char** out)
{
    ZK_REQUIRE(member);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(zeck::members_to_string({member->value}, h_max, to_format(format)));
        return ZK_OK;
    });
}

void zk_member_free(zk_member* member) { delete member; }

zk_status zk_family_table(zk_family family, const zk_natural* m, int k_min, int k_max, unsigned h_max,
                          zk_format format, char** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        if (k_min < 1 || k_max < k_min)
            return set_error(ZK_ERR_OUT_OF_RANGE, "invalid k range");
        const zeck::Family f = to_family(family);
        const bool multiplied = f == zeck::Family::Thm4 || f == zeck::Family::Thm5;
        const zeck::Natural mult = multiplied && m ? m->value : zeck::Natural(1);
        std::vector<zeck::FamilyMember> members;
        for (int k = k_min; k <= k_max; ++k)
            members.push_back(zeck::make_member(f, mult, k));
        *out = dup_string(zeck::members_to_string(members, h_max, to_format(format)));
        return ZK_OK;
    });
}

zk_status zk_fibcoro_witness(int N, unsigned h, zk_member** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = new zk_member{zeck::fibcoro_witness(N, h)};
        return ZK_OK;
    });
}

// --- verification -----------------------------------------------------------

void zk_params_init(zk_params* params)
{
    if (!params)
        return;
    params->k_min = ZK_UNSET_INT;
    params->k_max = ZK_UNSET_INT;
    params->h = ZK_UNSET_INT;
    params->n_max = ZK_UNSET_U64;
    params->m = nullptr;
    params->eps = nullptr;
    params->delta = nullptr;
    params->seed = zeck::Params{}.seed;
    params->jobs = 1;
}

const char* zk_verify_targets(void)
{
    static const std::string names = [] {
        std::string s;
        for (const auto& t : zeck::verification_targets())
            s += (s.empty() ? "" : ",") + std::string(t.name);
        return s;
    }();
    return names.c_str();
}

zk_status zk_verify(const char* target, const zk_params* params, zk_report_set** out)
{
    ZK_REQUIRE(target);
    ZK_REQUIRE(out);
    return guarded([&] {
        zeck::Params p;
        if (params) {
            if (params->k_min != ZK_UNSET_INT)
                p.k_min = params->k_min;
            if (params->k_max != ZK_UNSET_INT)
                p.k_max = params->k_max;
            if (params->h != ZK_UNSET_INT) {
                if (params->h < 1)
                    return set_error(ZK_ERR_OUT_OF_RANGE, "h must be >= 1");
                p.h = static_cast<unsigned>(params->h);
            }
            if (params->n_max != ZK_UNSET_U64)
                p.n_max = params->n_max;
            try {
                if (params->m)
                    p.m = zeck::parse_natural(params->m);
                if (params->eps)
                    p.eps = zeck::parse_rational(params->eps);
                if (params->delta)
                    p.delta = zeck::parse_rational(params->delta);
            } catch (const zeck::Error& e) {
                return set_error(ZK_ERR_PARSE, e.what());
            }
            p.seed = params->seed;
            p.jobs = params->jobs;
        }
        auto set = std::make_unique<zk_report_set>();
        set->reports = zeck::run_target(target, p);
        *out = set.release();
        return ZK_OK;
    });
}

size_t zk_report_set_size(const zk_report_set* set) { return set ? set->reports.size() : 0; }

size_t zk_report_set_failed(const zk_report_set* set)
{
    if (!set)
        return 0;
    size_t n = 0;
    for (const auto& r : set->reports)
        n += r.failed() ? 1 : 0;
    return n;
}

zk_status zk_report_set_render(const zk_report_set* set, zk_format format, char** out)
{
    ZK_REQUIRE(set);
    ZK_REQUIRE(out);
    return guarded([&] {
        switch (to_format(format)) {
        case zeck::Format::Json:
            *out = dup_string(zeck::reports_to_json(set->reports));
            break;
        case zeck::Format::Csv:
            *out = dup_string(zeck::reports_to_csv(set->reports));
            break;
        case zeck::Format::Text:
            *out = dup_string(zeck::reports_to_text(set->reports));
            break;
        }
        return ZK_OK;
    });
}

void zk_report_set_free(zk_report_set* set) { delete set; }

zk_status zk_ratio(const zk_natural* n, unsigned h, char** out)
{
    ZK_REQUIRE(n);
    ZK_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(zeck::ratio(n->value, h).get_str());
        return ZK_OK;
    });
}

zk_status zk_scan(uint64_t n_min, uint64_t n_max, unsigned h, unsigned jobs, zk_format format, char** out)
{
    ZK_REQUIRE(out);
    return guarded([&] {
        const auto rows = zeck::ratio_table(n_min, n_max, h, jobs);
        *out = dup_string(zeck::ratio_table_to_string(rows, h, to_format(format)));
        return ZK_OK;
    });
}

} // extern "C"

#ifndef ZECK_ZECK_H
#define ZECK_ZECK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZK_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ZK_API __attribute__((visibility("default")))
#else
#define ZK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zk_status {
    ZK_OK = 0,
    ZK_ERR_NULL_ARGUMENT = 1,
    ZK_ERR_INVALID_ARGUMENT = 2,
    ZK_ERR_PARSE = 3,
    ZK_ERR_OUT_OF_RANGE = 4,
    ZK_ERR_INTERFERING = 5,
    ZK_ERR_BELOW_THRESHOLD = 6,
    ZK_ERR_DEFECT = 7,
    ZK_ERR_UNKNOWN_CLAIM = 8,
    ZK_ERR_BUFFER_TOO_SMALL = 9,
    ZK_ERR_UNDECIDABLE = 10,
    ZK_ERR_INTERNAL = 11
} zk_status;

typedef enum zk_format { ZK_FORMAT_TEXT = 0, ZK_FORMAT_JSON = 1, ZK_FORMAT_CSV = 2 } zk_format;

typedef enum zk_family { ZK_FAMILY_UPPER = 0, ZK_FAMILY_LOWER = 1, ZK_FAMILY_THM4 = 2, ZK_FAMILY_THM5 = 3 } zk_family;

/* Opaque handles. Each has a matching *_free that accepts NULL. */
typedef struct zk_natural zk_natural;
typedef struct zk_form zk_form;
typedef struct zk_member zk_member;
typedef struct zk_report_set zk_report_set;

ZK_API const char* zk_version(void);
ZK_API const char* zk_status_name(zk_status status);
/* Message of the last failing call on this thread; "" when none. */
ZK_API const char* zk_last_error_message(void);
/* Releases strings returned through char** out-parameters. */
ZK_API void zk_string_free(char* s);

/* Naturals ---------------------------------------------------------------- */

ZK_API zk_status zk_natural_parse(const char* decimal, zk_natural** out);
ZK_API zk_status zk_natural_from_u64(uint64_t value, zk_natural** out);
ZK_API zk_status zk_natural_pow(const zk_natural* base, unsigned exponent, zk_natural** out);
ZK_API zk_status zk_natural_to_string(const zk_natural* n, char** out);
ZK_API void zk_natural_free(zk_natural* n);

/* Fibonacci and Lucas numbers ---------------------------------------------- */

ZK_API zk_status zk_fib(int j, char** out);
/* Negative k is accepted and uses L_{-k} = (-1)^k L_k. */
ZK_API zk_status zk_lucas(int k, char** out);
/* Bracket [lower, upper] containing the index of the leading Zeckendorf digit of x >= 1. */
ZK_API zk_status zk_digit_index_estimate(const zk_natural* x, int* lower, int* upper);

/* Zeckendorf representation ------------------------------------------------ */

/* Writes the Fibonacci indices of x, largest first. *count always receives the
   number of indices; ZK_ERR_BUFFER_TOO_SMALL when capacity is short. */
ZK_API zk_status zk_encode(const zk_natural* x, int* indices, size_t capacity, size_t* count);
/* Digit string, most significant first, lowest digit F_2. "" for zero. */
ZK_API zk_status zk_encode_digits(const zk_natural* x, char** out);
ZK_API zk_status zk_decode_digits(const char* digits, zk_natural** out);
ZK_API zk_status zk_decode_indices(const int* indices, size_t count, zk_natural** out);
ZK_API zk_status zk_sf(const zk_natural* x, uint64_t* out);
/* Coin-change minimum over Fibonacci numbers; 1 <= x <= 10^5. */
ZK_API zk_status zk_minimal_count(uint64_t x, unsigned* out);

/* Lucas forms -------------------------------------------------------------- */

ZK_API zk_status zk_form_lucas(int k, zk_form** out);
ZK_API zk_status zk_form_mul(const zk_form* a, const zk_form* b, zk_form** out);
ZK_API zk_status zk_form_pow(const zk_form* f, unsigned h, zk_form** out);
/* Binomial expansion of L_k^h, halved with an integrality check. */
ZK_API zk_status zk_form_power_direct(int k, unsigned h, zk_form** out);
ZK_API zk_status zk_form_value(const zk_form* f, zk_natural** out);
ZK_API zk_status zk_form_to_string(const zk_form* f, char** out);
ZK_API zk_status zk_form_sf(const zk_form* f, uint64_t* out);
ZK_API void zk_form_free(zk_form* f);

/* Symbolic Zeckendorf expansion of m * L_k as one block, e.g. "(10001)_7". */
ZK_API zk_status zk_multiple_to_blocks(const zk_natural* m, int k, char** out);

/* Family members ----------------------------------------------------------- */

ZK_API zk_status zk_family_parse(const char* name, zk_family* out);
/* m is ignored (may be NULL) for the upper and lower families. */
ZK_API zk_status zk_member_create(zk_family family, const zk_natural* m, int k, zk_member** out);
ZK_API zk_status zk_member_n(const zk_member* member, zk_natural** out);
ZK_API zk_status zk_member_form(const zk_member* member, zk_form** out);
/* Renders family, k, m, n, s_F(n) and s_F(n^h) for 2 <= h <= h_max. */
ZK_API zk_status zk_member_render(const zk_member* member, unsigned h_max, zk_format format, char** out);
ZK_API void zk_member_free(zk_member* member);
ZK_API zk_status zk_family_table(zk_family family, const zk_natural* m, int k_min, int k_max, unsigned h_max,
                                 zk_format format, char** out);
/* n with exactly N digits and s_F(n^h) <= 130 h^2; ZK_ERR_BELOW_THRESHOLD for small N. */
ZK_API zk_status zk_fibcoro_witness(int N, unsigned h, zk_member** out);

/* Verification ------------------------------------------------------------- */

#define ZK_UNSET_INT INT32_MIN
#define ZK_UNSET_U64 UINT64_MAX

/* Unset fields take each target's defaults. Strings are decimal naturals or
   rationals "p/q"; NULL means unset. */
typedef struct zk_params {
    int32_t k_min;
    int32_t k_max;
    int32_t h;
    uint64_t n_max;
    const char* m;
    const char* eps;
    const char* delta;
    uint64_t seed;
    unsigned jobs;
} zk_params;

ZK_API void zk_params_init(zk_params* params);
/* Comma-separated target names in the order "all" runs them. */
ZK_API const char* zk_verify_targets(void);
ZK_API zk_status zk_verify(const char* target, const zk_params* params, zk_report_set** out);
ZK_API size_t zk_report_set_size(const zk_report_set* set);
ZK_API size_t zk_report_set_failed(const zk_report_set* set);
ZK_API zk_status zk_report_set_render(const zk_report_set* set, zk_format format, char** out);
ZK_API void zk_report_set_free(zk_report_set* set);

/* s_F(n^h)/s_F(n) as "p/q". */
ZK_API zk_status zk_ratio(const zk_natural* n, unsigned h, char** out);
/* Ratio table for n_min <= n <= n_max. */
ZK_API zk_status zk_scan(uint64_t n_min, uint64_t n_max, unsigned h, unsigned jobs, zk_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif

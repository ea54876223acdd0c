#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "zeck/numeric.hpp"

namespace zeck {

/// Largest index whose Fibonacci number fits in 64 bits.
inline constexpr int kMaxFibU64Index = 93;

namespace detail {
constexpr std::array<std::uint64_t, kMaxFibU64Index + 1> make_fib_u64()
{
    std::array<std::uint64_t, kMaxFibU64Index + 1> table{};
    table[1] = 1;
    for (int j = 2; j <= kMaxFibU64Index; ++j)
        table[j] = table[j - 1] + table[j - 2];
    return table;
}
} // namespace detail

inline constexpr auto kFibU64 = detail::make_fib_u64();

/// F_j with F_0 = 0, F_1 = F_2 = 1. Values come from a process-wide
/// append-only table; the returned reference stays valid for the lifetime of
/// the process and may be read concurrently with table growth.
const Natural& fib(int j);

/// Grows the table so that fib(j) is available for every j <= index.
void reserve_fib(int index);

/// L_k = F_{k-1} + F_{k+1}, L_0 = 2. Negative k uses L_{-n} = (-1)^n L_n
/// and is rejected unless allow_negative is set.
Int lucas(int k, bool allow_negative = false);

/// Smallest j >= 2 with F_j > x (so the top Zeckendorf index of x >= 1 is j - 1).
int fib_index_above(const Natural& x);

/// The constants of the digit-count estimate, n = log x / log phi + gamma with
/// gamma in (delta, delta'). Doubles are display values; the interval
/// functions are the certified enclosures used in comparisons.
struct Constants {
    double phi;
    double log_phi;
    double delta;
    double delta_prime;
};

const Constants& constants();
Interval delta_interval(mpfr_prec_t precision);
Interval delta_prime_interval(mpfr_prec_t precision);
/// log(sqrt 5) / log(phi)
Interval log_sqrt5_over_log_phi(mpfr_prec_t precision);

struct IndexBracket {
    int lower;
    int upper;
    bool contains(int n) const noexcept { return lower <= n && n <= upper; }
};

/// [ceil(log x / log phi + delta), floor(log x / log phi + delta')], which
/// contains the top Zeckendorf index of x. Requires x >= 1.
IndexBracket digit_index_estimate(const Natural& x);

} // namespace zeck

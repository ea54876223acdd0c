#include "zeck/fib_core.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <string>

namespace zeck {

namespace {

// Chunked append-only storage. Chunks are allocated once and never moved, so
// references handed out by fib() survive later growth. Readers only touch
// indices below `published_`, which is released after the values are built.
class FibTable {
public:
    static constexpr int kChunkBits = 10;
    static constexpr int kChunkSize = 1 << kChunkBits;
    static constexpr int kMaxChunks = 1 << 12;
    static constexpr int kCapacity = kChunkSize * kMaxChunks;

    FibTable() { grow(kMaxFibU64Index + 1); }

    ~FibTable()
    {
        for (auto& chunk : chunks_)
            delete[] chunk.load(std::memory_order_relaxed);
    }

    FibTable(const FibTable&) = delete;
    FibTable& operator=(const FibTable&) = delete;

    const Natural& at(int j)
    {
        if (j >= published_.load(std::memory_order_acquire))
            grow(j + 1);
        return slot(j);
    }

    void grow(int count)
    {
        if (count > kCapacity)
            throw Error(ErrorCode::OutOfRange, "Fibonacci index beyond table capacity: " + std::to_string(count - 1));
        std::lock_guard lock(mutex_);
        int have = published_.load(std::memory_order_relaxed);
        if (have >= count)
            return;
        // Grow geometrically so long scans do not take the lock repeatedly.
        count = std::min(kCapacity, std::max(count, have + have / 2));
        for (int j = have; j < count; ++j) {
            auto& chunk = chunks_[j >> kChunkBits];
            if (chunk.load(std::memory_order_relaxed) == nullptr)
                chunk.store(new Natural[kChunkSize], std::memory_order_relaxed);
            Natural& out = slot(j);
            if (j < 2)
                out = j;
            else
                out = slot(j - 1) + slot(j - 2);
        }
        published_.store(count, std::memory_order_release);
    }

private:
    Natural& slot(int j) const
    {
        return chunks_[j >> kChunkBits].load(std::memory_order_relaxed)[j & (kChunkSize - 1)];
    }

    std::mutex mutex_;
    std::atomic<int> published_{0};
    std::array<std::atomic<Natural*>, kMaxChunks> chunks_{};
};

FibTable& table()
{
    static FibTable instance;
    return instance;
}

} // namespace

const Natural& fib(int j)
{
    if (j < 0)
        throw Error(ErrorCode::InvalidArgument, "Fibonacci index must be non-negative, got " + std::to_string(j));
    return table().at(j);
}

void reserve_fib(int index)
{
    if (index >= 0)
        table().grow(index + 1);
}

Int lucas(int k, bool allow_negative)
{
    if (k == 0)
        return Int(2);
    if (k > 0)
        return fib(k - 1) + fib(k + 1);
    if (!allow_negative)
        throw Error(ErrorCode::InvalidArgument, "negative Lucas index " + std::to_string(k) + " not allowed");
    const int n = -k;
    Int value = lucas(n);
    return n % 2 == 0 ? value : Int(-value);
}

int fib_index_above(const Natural& x)
{
    if (sgn(x) < 0)
        throw Error(ErrorCode::InvalidArgument, "negative argument");
    if (fits_u64(x)) {
        const std::uint64_t v = to_u64(x);
        if (v < kFibU64[kMaxFibU64Index]) {
            auto it = std::upper_bound(kFibU64.begin() + 2, kFibU64.end(), v);
            return static_cast<int>(it - kFibU64.begin());
        }
    }
    // x < 2^bits <= phi^(j - 2) once j - 2 >= bits * log 2 / log phi.
    const auto bits = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
    const int hi = static_cast<int>(bits * 1.4405) + 4;
    reserve_fib(hi);
    int lo = kMaxFibU64Index - 1;
    int top = hi;
    // Invariant: fib(lo) <= x < fib(top).
    while (top - lo > 1) {
        const int mid = lo + (top - lo) / 2;
        if (fib(mid) <= x)
            lo = mid;
        else
            top = mid;
    }
    return top;
}

Interval log_sqrt5_over_log_phi(mpfr_prec_t precision)
{
    return Interval::log(Natural(5), precision) / (Interval::of(2L, precision) * Interval::log_phi(precision));
}

Interval delta_interval(mpfr_prec_t precision)
{
    return log_sqrt5_over_log_phi(precision) - Interval::of(1L, precision);
}

Interval delta_prime_interval(mpfr_prec_t precision)
{
    return log_sqrt5_over_log_phi(precision) + Interval::of(Rational(3, 2), precision);
}

const Constants& constants()
{
    static const Constants values = [] {
        constexpr mpfr_prec_t prec = 256;
        Constants c{};
        c.log_phi = midpoint([](mpfr_prec_t p) { return Interval::log_phi(p); }, prec);
        c.phi = midpoint(
            [](mpfr_prec_t p) {
                return (Interval::of(1L, p) + Interval::sqrt(Natural(5), p)) / Interval::of(2L, p);
            },
            prec);
        c.delta = midpoint(delta_interval, prec);
        c.delta_prime = midpoint(delta_prime_interval, prec);
        return c;
    }();
    return values;
}

IndexBracket digit_index_estimate(const Natural& x)
{
    if (sgn(x) <= 0)
        throw Error(ErrorCode::InvalidArgument, "digit_index_estimate requires x >= 1");
    auto scaled_log = [&x](mpfr_prec_t p) { return Interval::log(x, p) / Interval::log_phi(p); };
    const Int lower = certified_ceil([&](mpfr_prec_t p) { return scaled_log(p) + delta_interval(p); });
    const Int upper = certified_floor([&](mpfr_prec_t p) { return scaled_log(p) + delta_prime_interval(p); });
    return {static_cast<int>(lower.get_si()), static_cast<int>(upper.get_si())};
}

} // namespace zeck

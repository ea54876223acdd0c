#include "zeck/zeckendorf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "zeck/fib_core.hpp"

namespace zeck {

namespace {

void validate_indices(const std::vector<int>& sorted)
{
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 2)
            throw Error(ErrorCode::InvalidArgument, "Zeckendorf index below 2: " + std::to_string(sorted[i]));
        if (i > 0 && sorted[i] - sorted[i - 1] < 2)
            throw Error(ErrorCode::InvalidArgument,
                        "adjacent or repeated Zeckendorf indices " + std::to_string(sorted[i - 1]) + "," +
                            std::to_string(sorted[i]));
    }
}

int top_index_u64(std::uint64_t x)
{
    auto it = std::upper_bound(kFibU64.begin() + 2, kFibU64.end(), x);
    return static_cast<int>(it - kFibU64.begin()) - 1;
}

// Greedy over the 64-bit table; `emit` receives indices in decreasing order.
template <typename Emit>
void greedy_u64(std::uint64_t x, int top, Emit&& emit)
{
    int j = top;
    while (x != 0) {
        while (kFibU64[j] > x)
            --j;
        x -= kFibU64[j];
        emit(j);
        j -= 2;
    }
}

template <typename Emit>
void greedy(const Natural& x, Emit&& emit)
{
    if (sgn(x) < 0)
        throw Error(ErrorCode::InvalidArgument, "cannot expand a negative number");
    if (fits_u64(x)) {
        const std::uint64_t v = to_u64(x);
        if (v != 0)
            greedy_u64(v, top_index_u64(v), emit);
        return;
    }
    Natural rest = x;
    int j = fib_index_above(rest) - 1;
    while (sgn(rest) != 0) {
        if (fits_u64(rest)) {
            const std::uint64_t v = to_u64(rest);
            greedy_u64(v, std::min(j, top_index_u64(v)), emit);
            return;
        }
        while (fib(j) > rest)
            --j;
        rest -= fib(j);
        emit(j);
        j -= 2;
    }
}

} // namespace

ZeckRep ZeckRep::from_indices(std::vector<int> indices)
{
    std::sort(indices.begin(), indices.end());
    validate_indices(indices);
    return ZeckRep(std::move(indices));
}

ZeckRep ZeckRep::parse(std::string_view digits)
{
    std::vector<int> indices;
    const int n = static_cast<int>(digits.size());
    for (int pos = 0; pos < n; ++pos) {
        const char c = digits[static_cast<std::size_t>(pos)];
        if (c == '1')
            indices.push_back(n - 1 - pos + 2);
        else if (c != '0')
            throw Error(ErrorCode::InvalidArgument, "digit string may only contain 0 and 1");
    }
    return from_indices(std::move(indices));
}

std::string ZeckRep::to_digits() const
{
    if (indices_.empty())
        return {};
    std::string out(static_cast<std::size_t>(top_index() - 1), '0');
    for (int j : indices_)
        out[static_cast<std::size_t>(top_index() - j)] = '1';
    return out;
}

ZeckRep encode(const Natural& x)
{
    std::vector<int> indices;
    greedy(x, [&](int j) { indices.push_back(j); });
    std::reverse(indices.begin(), indices.end());
    return ZeckRep::from_indices(std::move(indices));
}

Natural decode(const ZeckRep& rep)
{
    Natural total = 0;
    for (int j : rep.indices())
        total += fib(j);
    return total;
}

std::size_t sum_of_digits(std::uint64_t x)
{
    std::size_t count = 0;
    if (x != 0)
        greedy_u64(x, top_index_u64(x), [&](int) { ++count; });
    return count;
}

std::size_t sum_of_digits(const Natural& x)
{
    std::size_t count = 0;
    greedy(x, [&](int) { ++count; });
    return count;
}

std::size_t sum_of_digits_of_power(std::uint64_t n, unsigned h)
{
    __extension__ using u128 = unsigned __int128;
    u128 acc = 1;
    bool fits = true;
    for (unsigned i = 0; i < h && fits; ++i) {
        acc *= n;
        fits = (acc >> 64) == 0;
    }
    if (fits)
        return sum_of_digits(static_cast<std::uint64_t>(acc));
    Natural p;
    mpz_pow_ui(p.get_mpz_t(), from_u64(n).get_mpz_t(), h);
    return sum_of_digits(p);
}

unsigned minimal_count_oracle(std::uint64_t x, std::uint64_t cap)
{
    if (x < 1 || x > cap)
        throw Error(ErrorCode::OutOfRange,
                    "oracle argument " + std::to_string(x) + " outside [1, " + std::to_string(cap) + "]");
    if (cap > (std::uint64_t{1} << 32))
        throw Error(ErrorCode::OutOfRange, "oracle cap too large for an in-memory table");

    using Table = std::vector<std::uint8_t>;
    static std::mutex mutex;
    static std::map<std::uint64_t, std::shared_ptr<const Table>> tables;

    std::shared_ptr<const Table> table;
    {
        std::lock_guard lock(mutex);
        auto& slot = tables[cap];
        if (!slot) {
            std::vector<std::uint64_t> coins;
            for (int j = 2; j <= kMaxFibU64Index && kFibU64[j] <= cap; ++j)
                coins.push_back(kFibU64[j]);
            coins.erase(std::unique(coins.begin(), coins.end()), coins.end());
            auto dp = std::make_shared<Table>(cap + 1, 0);
            for (std::uint64_t v = 1; v <= cap; ++v) {
                unsigned best = 0xff;
                for (std::uint64_t c : coins) {
                    if (c > v)
                        break;
                    best = std::min(best, static_cast<unsigned>((*dp)[v - c]) + 1);
                }
                (*dp)[v] = static_cast<std::uint8_t>(best);
            }
            slot = std::move(dp);
        }
        table = slot;
    }
    return (*table)[x];
}

// --- FibBlock ---------------------------------------------------------------

FibBlock::FibBlock(std::string_view digits, int offset) : offset_(offset)
{
    if (digits.empty())
        throw Error(ErrorCode::InvalidArgument, "empty Fibonacci block");
    if (digits.front() != '1')
        throw Error(ErrorCode::InvalidArgument, "Fibonacci block must start with a 1 digit");
    if (offset < 2)
        throw Error(ErrorCode::InvalidArgument, "Fibonacci block offset must be >= 2, got " + std::to_string(offset));
    digits_.reserve(digits.size());
    for (char c : digits) {
        if (c != '0' && c != '1')
            throw Error(ErrorCode::InvalidArgument, "Fibonacci block digits must be 0 or 1");
        digits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
}

std::size_t FibBlock::ones() const noexcept
{
    return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), std::uint8_t{1}));
}

std::vector<int> FibBlock::one_indices() const
{
    std::vector<int> out;
    const int p = static_cast<int>(digits_.size()) - 1;
    for (int i = p; i >= 0; --i) {
        if (digits_[static_cast<std::size_t>(p - i)])
            out.push_back(offset_ + i);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Natural FibBlock::value() const
{
    Natural total = 0;
    for (int j : one_indices())
        total += fib(j);
    return total;
}

std::string FibBlock::to_string() const
{
    std::string out = "(";
    for (auto d : digits_)
        out.push_back(static_cast<char>('0' + d));
    out += ")_" + std::to_string(offset_);
    return out;
}

Natural from_blocks(const std::vector<FibBlock>& blocks)
{
    Natural total = 0;
    for (const auto& block : blocks)
        total += block.value();
    return total;
}

bool noninterfering(const std::vector<FibBlock>& blocks)
{
    std::vector<const FibBlock*> order;
    order.reserve(blocks.size());
    for (const auto& b : blocks)
        order.push_back(&b);
    std::sort(order.begin(), order.end(), [](const FibBlock* a, const FibBlock* b) { return a->offset() < b->offset(); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (order[i - 1]->top_index() >= order[i]->offset())
            return false;
    }
    std::vector<int> ones;
    for (const FibBlock* b : order) {
        auto idx = b->one_indices();
        ones.insert(ones.end(), idx.begin(), idx.end());
    }
    for (std::size_t i = 1; i < ones.size(); ++i) {
        if (ones[i] - ones[i - 1] < 2)
            return false;
    }
    return true;
}

} // namespace zeck

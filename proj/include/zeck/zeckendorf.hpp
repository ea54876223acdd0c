#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/numeric.hpp"

namespace zeck {

/// A Zeckendorf representation: the Fibonacci indices j >= 2 carrying a 1
/// digit, strictly increasing, no two adjacent. Empty only for zero.
class ZeckRep {
public:
    ZeckRep() = default;

    /// Validates and takes the index list (any order; sorted on entry).
    static ZeckRep from_indices(std::vector<int> indices);
    /// Parses a digit string "1001" (most significant first, lowest digit is
    /// the F_2 position). Leading zeros are accepted; the empty string is 0.
    static ZeckRep parse(std::string_view digits);

    const std::vector<int>& indices() const& noexcept { return indices_; }
    std::vector<int> indices() && noexcept { return std::move(indices_); }
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    /// Largest index, or 0 for the empty representation.
    int top_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

    /// Digit string from the top index down to F_2; "" for zero.
    std::string to_digits() const;

    friend bool operator==(const ZeckRep&, const ZeckRep&) = default;

private:
    explicit ZeckRep(std::vector<int> sorted) : indices_(std::move(sorted)) {}
    std::vector<int> indices_;
};

/// Greedy expansion of x >= 0.
ZeckRep encode(const Natural& x);
Natural decode(const ZeckRep& rep);

/// Number of 1 digits in the Zeckendorf expansion; s_F(0) = 0.
std::size_t sum_of_digits(const Natural& x);
std::size_t sum_of_digits(std::uint64_t x);

/// s_F(n^h) without leaving 64-bit arithmetic when the power fits.
std::size_t sum_of_digits_of_power(std::uint64_t n, unsigned h);

inline constexpr std::uint64_t kDefaultOracleCap = 100000;

/// Minimal number of Fibonacci summands (repetition allowed) adding to x,
/// by coin-change dynamic programming. 1 <= x <= cap.
unsigned minimal_count_oracle(std::uint64_t x, std::uint64_t cap = kDefaultOracleCap);

/// The block (e_p ... e_0)_l, standing for sum e_i F_{i+l}.
class FibBlock {
public:
    /// digits are e_p ... e_0 as '0'/'1' characters; leading digit must be 1
    /// and offset >= 2.
    FibBlock(std::string_view digits, int offset);

    const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
    int offset() const noexcept { return offset_; }
    int top_index() const noexcept { return offset_ + static_cast<int>(digits_.size()) - 1; }
    std::size_t length() const noexcept { return digits_.size(); }
    std::size_t ones() const noexcept;
    /// Absolute Fibonacci indices of the 1 digits, increasing.
    std::vector<int> one_indices() const;
    Natural value() const;
    /// "(1001)_15"
    std::string to_string() const;

    friend bool operator==(const FibBlock&, const FibBlock&) = default;

private:
    std::vector<std::uint8_t> digits_;
    int offset_;
};

/// Sum of the blocks' values. Overlapping blocks are summed, not merged.
Natural from_blocks(const std::vector<FibBlock>& blocks);

/// True iff the blocks occupy pairwise disjoint index ranges and all their 1
/// digits taken together have no two adjacent indices, so that the digit
/// count of the total is the sum of the blocks' digit counts.
bool noninterfering(const std::vector<FibBlock>& blocks);

} // namespace zeck

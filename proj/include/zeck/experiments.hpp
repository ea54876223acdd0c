#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/constructions.hpp"
#include "zeck/numeric.hpp"

namespace zeck {

enum class ClaimStatus { Pass, Fail, BelowThreshold };

std::string_view status_name(ClaimStatus status);

struct Witness {
    std::string input;
    std::string expected;
    std::string actual;
};

struct RangeTested {
    std::string variable;
    std::int64_t min = 0;
    std::int64_t max = 0;
};

/// Outcome of checking one named claim over a parameter range. A failing
/// report always carries at least one witness.
struct ClaimReport {
    std::string claim_id;
    std::map<std::string, std::int64_t> params;
    RangeTested range_tested;
    ClaimStatus status = ClaimStatus::Pass;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<Witness> witnesses;
    std::map<std::string, std::int64_t> discovered_thresholds;
    /// Measured values worth pinning (counts, stabilised digit sums).
    std::map<std::string, std::string> observed;

    bool failed() const noexcept { return status == ClaimStatus::Fail; }
};

/// Collects failing witnesses (first kMaxFailures, in scan order) and, while
/// nothing has failed, the first few passing cases as samples. Merging logs
/// of consecutive chunks in order gives the same result as one serial scan.
class WitnessLog {
public:
    static constexpr std::size_t kMaxFailures = 20;
    static constexpr std::size_t kMaxSamples = 3;

    template <typename Make>
    void pass(Make&& make)
    {
        ++cases_;
        if (samples_.size() < kMaxSamples)
            samples_.push_back(make());
    }
    void fail(Witness w);
    void skip() { ++skipped_; }
    void merge(WitnessLog&& later);

    std::uint64_t cases() const noexcept { return cases_; }
    std::uint64_t failures() const noexcept { return failure_count_; }
    std::uint64_t skipped() const noexcept { return skipped_; }

    /// Fills cases, failures, witnesses and sets status to Fail when needed.
    void finish(ClaimReport& report) const;

private:
    std::uint64_t cases_ = 0;
    std::uint64_t failure_count_ = 0;
    std::uint64_t skipped_ = 0;
    std::vector<Witness> failures_;
    std::vector<Witness> samples_;
};

/// s_F(n^h) / s_F(n), exact. n >= 2.
Rational ratio(const Natural& n, unsigned h);

ClaimReport scan_ratio_bounds(std::uint64_t n_max, unsigned h, unsigned jobs = 1);

/// Both parts of the Fibonacci-minus-small-number lemma, every admissible
/// (k, z) with k <= k_max. Returns the reports for part (i) and part (ii).
std::vector<ClaimReport> verify_lemma_expand(int k_max, unsigned jobs = 1);

struct CountResult {
    /// Exhaustive count over 2 <= n < N; absent when N exceeds the
    /// exhaustive cap.
    std::optional<std::uint64_t> count;
    /// Distinct family members n < N that qualify.
    std::uint64_t constructed = 0;
};

inline constexpr std::uint64_t kExhaustiveCountCap = 1000000;
inline constexpr std::uint64_t kConstructedCountCap = 100000000;

/// #{n < N : s_F(n^h)/s_F(n) < eps}, plus the thm4 family members counted.
CountResult count_small_ratio(std::uint64_t N, unsigned h, const Rational& eps, unsigned jobs = 1);
/// #{n < N : s_F(n^h)/s_F(n) > delta}, plus the thm5 family members (k >= 2).
CountResult count_large_ratio(std::uint64_t N, unsigned h, const Rational& delta, unsigned jobs = 1);

/// Optional overrides for a verification target; unset fields take the
/// target's defaults.
struct Params {
    std::optional<int> k_min;
    std::optional<int> k_max;
    std::optional<unsigned> h;
    std::optional<Natural> m;
    std::optional<std::uint64_t> n_max;
    std::optional<Rational> eps;
    std::optional<Rational> delta;
    std::uint64_t seed = 20100101;
    unsigned jobs = 1;
};

struct TargetInfo {
    std::string_view name;
    std::string_view summary;
};

/// Every verification target, in the order `all` runs them.
const std::vector<TargetInfo>& verification_targets();

/// Runs one target (or "all") and returns its reports. Throws
/// ErrorCode::UnknownClaim for an unknown name.
std::vector<ClaimReport> run_target(std::string_view target, const Params& params);

// Individual verifications used by run_target.
ClaimReport verify_minimality(std::uint64_t x_max);
std::vector<ClaimReport> verify_subadditivity(std::uint64_t limit);
ClaimReport verify_linear(int k_min, int k_max);
ClaimReport verify_power_digit_sum(unsigned h, int k_min, int k_max, std::size_t expected);
ClaimReport verify_blocks(unsigned h, int k_min, int k_max);
ClaimReport verify_lower_power_bound(unsigned h, int k_min, int k_max);
ClaimReport verify_hexp_identity(int k_min, int k_max, unsigned h_min, unsigned h_max);
ClaimReport verify_upper_power_bound(const std::vector<unsigned>& hs, int k_max);
std::vector<ClaimReport> verify_lucasmulti(std::uint64_t m_max, int window);
ClaimReport verify_fibcoro(unsigned h, int N_min, int N_max);
ClaimReport verify_homomorphism(unsigned trials, std::uint64_t seed);
ClaimReport verify_powerformula(int k_max, unsigned h_max);
std::vector<ClaimReport> verify_io_witnesses(unsigned h, int k_max);
ClaimReport verify_count_small(std::uint64_t N, unsigned h, const Rational& eps, unsigned jobs);
ClaimReport verify_count_large(std::uint64_t N, unsigned h, const Rational& delta, unsigned jobs);

/// Rendering. JSON is a top-level array with one object per report, keys in
/// a fixed order; CSV has one row per witness.
std::string reports_to_json(const std::vector<ClaimReport>& reports);
std::string reports_to_csv(const std::vector<ClaimReport>& reports);
std::string reports_to_text(const std::vector<ClaimReport>& reports);

/// One row of a ratio scan.
struct RatioRow {
    std::uint64_t n;
    std::size_t digits_n;
    std::size_t digits_power;
};
std::vector<RatioRow> ratio_table(std::uint64_t n_min, std::uint64_t n_max, unsigned h, unsigned jobs = 1);

enum class Format { Text, Json, Csv };

std::string ratio_table_to_string(const std::vector<RatioRow>& rows, unsigned h, Format format);

/// Family member records {family, k, m, n, sF_n, sF_nh for h = 2..h_max}.
std::string members_to_string(const std::vector<FamilyMember>& members, unsigned h_max, Format format);

} // namespace zeck

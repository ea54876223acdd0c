#include "zeck/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "parallel.hpp"
#include "zeck/fib_core.hpp"
#include "zeck/lucas_algebra.hpp"
#include "zeck/zeckendorf.hpp"

namespace zeck {

namespace {

using json = nlohmann::ordered_json;

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }
std::string str(unsigned v) { return std::to_string(v); }
std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rational& v) { return v.get_str(); }

Natural power(const Natural& base, unsigned h)
{
    Natural out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), h);
    return out;
}

Rational frac(long num, long den)
{
    Rational r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

std::int64_t as_i64(const Int& v)
{
    if (!mpz_fits_slong_p(v.get_mpz_t()))
        throw Error(ErrorCode::OutOfRange, "value does not fit a report parameter");
    return v.get_si();
}

WitnessLog merge_all(std::vector<WitnessLog> parts)
{
    WitnessLog out;
    for (auto& p : parts)
        out.merge(std::move(p));
    return out;
}

ClaimReport new_report(std::string id, std::string variable, std::int64_t lo, std::int64_t hi)
{
    ClaimReport r;
    r.claim_id = std::move(id);
    r.range_tested = {std::move(variable), lo, hi};
    return r;
}

void mark_below_threshold_if_empty(ClaimReport& r, const WitnessLog& log, Witness why)
{
    if (log.cases() == 0 && r.status != ClaimStatus::Fail) {
        r.status = ClaimStatus::BelowThreshold;
        r.witnesses = {std::move(why)};
    }
}

} // namespace

std::string_view status_name(ClaimStatus status)
{
    switch (status) {
    case ClaimStatus::Pass:
        return "pass";
    case ClaimStatus::Fail:
        return "fail";
    case ClaimStatus::BelowThreshold:
        return "below-threshold";
    }
    return "?";
}

// --- WitnessLog -------------------------------------------------------------

void WitnessLog::fail(Witness w)
{
    ++cases_;
    ++failure_count_;
    if (failures_.size() < kMaxFailures)
        failures_.push_back(std::move(w));
}

void WitnessLog::merge(WitnessLog&& later)
{
    cases_ += later.cases_;
    failure_count_ += later.failure_count_;
    skipped_ += later.skipped_;
    for (auto& w : later.failures_) {
        if (failures_.size() < kMaxFailures)
            failures_.push_back(std::move(w));
    }
    for (auto& w : later.samples_) {
        if (samples_.size() < kMaxSamples)
            samples_.push_back(std::move(w));
    }
}

void WitnessLog::finish(ClaimReport& report) const
{
    report.cases = cases_;
    report.failures = failure_count_;
    if (failure_count_ > 0) {
        report.status = ClaimStatus::Fail;
        report.witnesses = failures_;
    } else {
        report.witnesses = samples_;
    }
}

// --- ratio and scans --------------------------------------------------------

Rational ratio(const Natural& n, unsigned h)
{
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "ratio requires n >= 2");
    Rational r(Int(sum_of_digits(power(n, h))), Int(sum_of_digits(n)));
    r.canonicalize();
    return r;
}

ClaimReport scan_ratio_bounds(std::uint64_t n_max, unsigned h, unsigned jobs)
{
    if (n_max < 2)
        throw Error(ErrorCode::InvalidArgument, "thm2 scan needs n_max >= 2");
    if (h < 2)
        throw Error(ErrorCode::InvalidArgument, "thm2 scan needs h >= 2");
    ClaimReport report = new_report("thm2-bounds", "n", 2, static_cast<std::int64_t>(n_max));
    const long c3 = 2L * h;
    report.params = {{"h", h}, {"c3", c3}, {"c4_num", 1}, {"c4_den", 2}};

    auto parts = detail::run_chunks(2, n_max + 1, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        WitnessLog log;
        for (std::uint64_t n = lo; n < hi; ++n) {
            const auto a = static_cast<long>(sum_of_digits_of_power(n, h));
            const auto b = static_cast<long>(sum_of_digits(n));
            const Natural big_n = from_u64(n);
            // c4 / log n <= a / b  <=>  a log n - b / 2 >= 0
            const int lower = certified_sign([&](mpfr_prec_t p) {
                return Interval::of(a, p) * Interval::log(big_n, p) - Interval::of(frac(b, 2), p);
            });
            // a / b <= c3 log n  <=>  c3 b log n - a >= 0
            const int upper = certified_sign([&](mpfr_prec_t p) {
                return Interval::of(c3 * b, p) * Interval::log(big_n, p) - Interval::of(a, p);
            });
            auto make = [&] {
                return Witness{"n=" + str(n), "1/(2 log n) <= ratio <= " + str(c3) + " log n",
                               "ratio=" + str(a) + "/" + str(b)};
            };
            if (lower >= 0 && upper >= 0)
                log.pass(make);
            else
                log.fail(make());
        }
        return log;
    });
    merge_all(std::move(parts)).finish(report);
    return report;
}

std::vector<ClaimReport> verify_lemma_expand(int k_max, unsigned jobs)
{
    if (k_max < 1 || 2 * k_max + 1 > kMaxFibU64Index)
        throw Error(ErrorCode::OutOfRange, "lemma-expand needs 1 <= k_max <= 46");

    auto run_part = [&](bool odd) {
        ClaimReport report = new_report(odd ? "lemma-expand-i" : "lemma-expand-ii", "k", 1, k_max);
        report.params = {{"k_max", k_max}};
        WitnessLog total;
        for (int k = 1; k <= k_max; ++k) {
            const int top = odd ? 2 * k + 1 : 2 * k;
            const std::uint64_t f_top = kFibU64[top];
            auto parts = detail::run_chunks(1, f_top + 1, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
                WitnessLog log;
                for (std::uint64_t z = lo; z < hi; ++z) {
                    // part (i): F_{2l} < z <= F_{2l+1}; part (ii): F_{2l-1} < z <= F_{2l}
                    int l = -1;
                    for (int cand = odd ? 0 : 1; cand <= k; ++cand) {
                        const int below = odd ? 2 * cand : 2 * cand - 1;
                        const int above = odd ? 2 * cand + 1 : 2 * cand;
                        if (kFibU64[below] < z && z <= kFibU64[above]) {
                            l = cand;
                            break;
                        }
                    }
                    if (l < 0) {
                        log.skip();
                        continue;
                    }
                    const std::uint64_t f_l = kFibU64[odd ? 2 * l + 1 : 2 * l];
                    const auto lhs = static_cast<long>(sum_of_digits(f_top - z));
                    const long rhs = k - l + static_cast<long>(sum_of_digits(f_l - z));
                    const Natural big_z = from_u64(z);
                    // lhs >= k - log z / (2 log phi) - delta' / 2
                    const int bound = certified_sign([&](mpfr_prec_t p) {
                        return Interval::of(lhs - k, p) +
                               (Interval::log(big_z, p) / Interval::log_phi(p) + delta_prime_interval(p)) /
                                   Interval::of(2L, p);
                    });
                    auto make = [&] {
                        return Witness{"k=" + str(k) + ",z=" + str(z) + ",l=" + str(l),
                                       "sF=" + str(rhs) + " and bound holds", "sF=" + str(lhs)};
                    };
                    if (lhs == rhs && bound >= 0)
                        log.pass(make);
                    else
                        log.fail(make());
                }
                return log;
            });
            total.merge(merge_all(std::move(parts)));
        }
        total.finish(report);
        report.observed["inadmissible_z"] = str(total.skipped());
        return report;
    };
    return {run_part(true), run_part(false)};
}

// --- counting ---------------------------------------------------------------

namespace {

enum class Direction { Below, Above };

bool qualifies(std::size_t a, std::size_t b, const Rational& threshold, Direction dir)
{
    const Rational r = frac(static_cast<long>(a), static_cast<long>(b));
    return dir == Direction::Below ? r < threshold : r > threshold;
}

CountResult count_ratio(std::uint64_t N, unsigned h, const Rational& threshold, Direction dir, unsigned jobs)
{
    if (h < 1)
        throw Error(ErrorCode::InvalidArgument, "exponent must be >= 1");
    if (N > kConstructedCountCap)
        throw Error(ErrorCode::OutOfRange, "N above the constructed-count cap " + str(kConstructedCountCap));
    CountResult result;
    auto check = [&](std::uint64_t n) {
        return qualifies(sum_of_digits_of_power(n, h), sum_of_digits(n), threshold, dir);
    };
    if (N <= kExhaustiveCountCap && N > 2) {
        auto parts = detail::run_chunks(2, N, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t c = 0;
            for (std::uint64_t n = lo; n < hi; ++n)
                c += check(n) ? 1 : 0;
            return c;
        });
        std::uint64_t total = 0;
        for (auto c : parts)
            total += c;
        result.count = total;
    } else if (N <= 2) {
        result.count = 0;
    }

    std::set<std::uint64_t> members;
    const Natural bound = from_u64(N);
    for (int k = dir == Direction::Below ? 1 : 2;; ++k) {
        const Natural base = dir == Direction::Below ? lower_family(k).n : upper_family(k).n;
        if (base >= bound)
            break;
        const std::uint64_t b = to_u64(base);
        for (std::uint64_t n = b; n < N; n += b) {
            if (n >= 2 && check(n))
                members.insert(n);
        }
    }
    result.constructed = members.size();
    return result;
}

ClaimReport count_report(std::string id, std::string threshold_name, std::uint64_t N, unsigned h,
                         const Rational& threshold, const CountResult& res)
{
    ClaimReport report = new_report(std::move(id), "n", 2, static_cast<std::int64_t>(N) - 1);
    report.params = {{"N", static_cast<std::int64_t>(N)},
                     {"h", h},
                     {threshold_name + "_num", as_i64(threshold.get_num())},
                     {threshold_name + "_den", as_i64(threshold.get_den())}};
    report.cases = N > 2 ? N - 2 : 0;
    report.observed["constructed"] = str(res.constructed);
    report.observed["count"] = res.count ? str(*res.count) : std::string("not computed");
    Witness w{"N=" + str(N) + ",h=" + str(h) + "," + threshold_name + "=" + str(threshold),
              "0 < constructed <= count",
              "constructed=" + str(res.constructed) + ",count=" + report.observed["count"]};
    if (res.count && res.constructed > *res.count) {
        report.status = ClaimStatus::Fail;
        report.failures = 1;
    } else if (res.constructed == 0) {
        report.status = ClaimStatus::BelowThreshold;
    }
    report.witnesses = {std::move(w)};
    return report;
}

} // namespace

CountResult count_small_ratio(std::uint64_t N, unsigned h, const Rational& eps, unsigned jobs)
{
    return count_ratio(N, h, eps, Direction::Below, jobs);
}

CountResult count_large_ratio(std::uint64_t N, unsigned h, const Rational& delta, unsigned jobs)
{
    return count_ratio(N, h, delta, Direction::Above, jobs);
}

ClaimReport verify_count_small(std::uint64_t N, unsigned h, const Rational& eps, unsigned jobs)
{
    return count_report("count-small", "eps", N, h, eps, count_small_ratio(N, h, eps, jobs));
}

ClaimReport verify_count_large(std::uint64_t N, unsigned h, const Rational& delta, unsigned jobs)
{
    return count_report("count-large", "delta", N, h, delta, count_large_ratio(N, h, delta, jobs));
}

// --- individual verifications -----------------------------------------------

ClaimReport verify_minimality(std::uint64_t x_max)
{
    if (x_max < 1)
        throw Error(ErrorCode::InvalidArgument, "minimality needs x_max >= 1");
    ClaimReport report = new_report("sF-minimality", "x", 1, static_cast<std::int64_t>(x_max));
    const std::uint64_t cap = std::max(x_max, kDefaultOracleCap);
    report.params = {{"oracle_cap", static_cast<std::int64_t>(cap)}};
    WitnessLog log;
    for (std::uint64_t x = 1; x <= x_max; ++x) {
        const std::size_t greedy = sum_of_digits(x);
        const unsigned oracle = minimal_count_oracle(x, cap);
        auto make = [&] { return Witness{"x=" + str(x), "oracle=" + str(oracle), "sF=" + str(greedy)}; };
        if (greedy == oracle)
            log.pass(make);
        else
            log.fail(make());
    }
    log.finish(report);
    return report;
}

std::vector<ClaimReport> verify_subadditivity(std::uint64_t limit)
{
    if (limit < 1)
        throw Error(ErrorCode::InvalidArgument, "subadditivity needs a positive limit");
    std::vector<std::uint8_t> sf(2 * limit + 1);
    for (std::uint64_t x = 0; x <= 2 * limit; ++x)
        sf[x] = static_cast<std::uint8_t>(sum_of_digits(x));

    ClaimReport sub = new_report("subadditive", "a,b", 1, static_cast<std::int64_t>(limit));
    WitnessLog log;
    for (std::uint64_t a = 1; a <= limit; ++a) {
        for (std::uint64_t b = 1; b <= limit; ++b) {
            auto make = [&] {
                return Witness{"a=" + str(a) + ",b=" + str(b), "sF(a+b)<=" + str(unsigned{sf[a]} + sf[b]),
                               "sF(a+b)=" + str(unsigned{sf[a + b]})};
            };
            if (sf[a + b] <= sf[a] + sf[b])
                log.pass(make);
            else
                log.fail(make());
        }
    }
    log.finish(sub);

    ClaimReport mult = new_report("not-submultiplicative", "a,b", 1, 100);
    std::uint64_t pairs = 0;
    std::vector<Witness> found;
    for (std::uint64_t a = 1; a <= 100; ++a) {
        for (std::uint64_t b = 1; b <= 100; ++b) {
            const auto sab = sum_of_digits(a * b);
            const auto prod = sum_of_digits(a) * sum_of_digits(b);
            if (sab > prod) {
                ++pairs;
                if (found.size() < WitnessLog::kMaxSamples || (a == 2 && b == 3))
                    found.push_back({"a=" + str(a) + ",b=" + str(b), "sF(ab)>sF(a)sF(b)=" + str(prod),
                                     "sF(ab)=" + str(sab)});
            }
        }
    }
    mult.cases = 100 * 100;
    mult.observed["counterexample_pairs"] = str(pairs);
    const bool has_2_3 = sum_of_digits(std::uint64_t{6}) > sum_of_digits(std::uint64_t{2}) * sum_of_digits(std::uint64_t{3});
    if (pairs == 0 || !has_2_3) {
        mult.status = ClaimStatus::Fail;
        mult.failures = 1;
        mult.witnesses = {{"a=2,b=3", "sF(6)>sF(2)sF(3)", "sF(6)=" + str(sum_of_digits(std::uint64_t{6}))}};
    } else {
        mult.witnesses = std::move(found);
    }
    return {sub, mult};
}

ClaimReport verify_linear(int k_min, int k_max)
{
    ClaimReport report = new_report("sF-nk-eq-k-plus-6", "k", k_min, k_max);
    auto holds = [](int k, std::string* actual) {
        const ZeckRep rep = encode(lower_family(k).n);
        std::vector<int> low;
        for (int j : rep.indices()) {
            if (j < 2 * k + 2)
                low.push_back(j);
        }
        std::vector<int> expected;
        for (int j = 2; j <= 2 * k - 2; j += 2)
            expected.push_back(j);
        expected.push_back(2 * k + 1);
        if (actual) {
            *actual = "sF=" + str(rep.size()) + ",low=";
            for (std::size_t i = 0; i < low.size(); ++i)
                *actual += (i ? " " : "") + str(low[i]);
        }
        return rep.size() == static_cast<std::size_t>(k + 6) && low == expected;
    };
    WitnessLog log;
    for (int k = k_min; k <= k_max; ++k) {
        std::string actual;
        const bool ok = holds(k, &actual);
        auto make = [&] { return Witness{"k=" + str(k), "sF=" + str(k + 6) + ",low=2 4 .. " + str(2 * k - 2) + " " + str(2 * k + 1), actual}; };
        if (ok)
            log.pass(make);
        else
            log.fail(make());
    }
    log.finish(report);
    if (auto t = discover_threshold(1, k_max, [&](int k) { return holds(k, nullptr); }))
        report.discovered_thresholds["k_min"] = *t;
    return report;
}

ClaimReport verify_power_digit_sum(unsigned h, int k_min, int k_max, std::size_t expected)
{
    std::string id = h == 2 && expected == 26 ? "sF-nk2-eq-26"
                     : h == 3 && expected == 60
                         ? "sF-nk3-eq-60"
                         : "sF-nk" + str(h) + "-eq-" + str(static_cast<std::uint64_t>(expected));
    ClaimReport report = new_report(std::move(id), "k", k_min, k_max);
    report.params = {{"h", h}, {"expected", static_cast<std::int64_t>(expected)}};
    std::vector<std::size_t> values(static_cast<std::size_t>(std::max(k_max, 0) + 1));
    auto digits = [&](int k) {
        auto& slot = values[static_cast<std::size_t>(k)];
        if (slot == 0)
            slot = sum_of_digits(power(lower_family(k).n, h));
        return slot;
    };
    WitnessLog log;
    for (int k = k_min; k <= k_max; ++k) {
        const std::size_t s = digits(k);
        auto make = [&] { return Witness{"k=" + str(k), "sF(n^" + str(h) + ")=" + str(static_cast<std::uint64_t>(expected)), "sF(n^" + str(h) + ")=" + str(static_cast<std::uint64_t>(s))}; };
        if (s == expected)
            log.pass(make);
        else
            log.fail(make());
    }
    log.finish(report);
    if (k_max >= 1) {
        if (auto t = discover_threshold(1, k_max, [&](int k) { return digits(k) == expected; }))
            report.discovered_thresholds["k_min"] = *t;
    }
    return report;
}

ClaimReport verify_blocks(unsigned h, int k_min, int k_max)
{
    if (h != 2 && h != 3)
        throw Error(ErrorCode::InvalidArgument, "block fixtures exist for h = 2 and h = 3 only");
    ClaimReport report = new_report(h == 2 ? "squares-blocks" : "cubes-blocks", "k", k_min, k_max);
    report.params = {{"h", h}, {"blocks", h == 2 ? 9 : 13}};
    WitnessLog log;
    for (int k = k_min; k <= k_max; ++k) {
        const Natural target = power(lower_family(k).n, h);
        try {
            const auto blocks = h == 2 ? squares_blocks(k) : cubes_blocks(k);
            const bool equal = from_blocks(blocks) == target;
            const bool disjoint = noninterfering(blocks);
            std::size_t ones = 0;
            for (const auto& b : blocks)
                ones += b.ones();
            const bool count_ok = !disjoint || ones == sum_of_digits(target);
            auto make = [&] {
                return Witness{"k=" + str(k), "value=n^" + str(h) + ",noninterfering",
                               std::string(equal ? "value ok" : "value differs") + "," +
                                   (disjoint ? "noninterfering" : "interfering") + ",ones=" +
                                   str(static_cast<std::uint64_t>(ones))};
            };
            if (equal && disjoint && count_ok)
                log.pass(make);
            else
                log.fail(make());
        } catch (const Error& e) {
            log.fail({"k=" + str(k), "valid blocks", e.what()});
        }
    }
    log.finish(report);
    return report;
}

ClaimReport verify_lower_power_bound(unsigned h, int k_min, int k_max)
{
    ClaimReport report = new_report("lower-power-upper-bound", "k", k_min, k_max);
    report.params = {{"h", h}};
    const LowerStabilisation st = lower_stabilisation(h);
    report.discovered_thresholds["k_stable"] = st.k_min;
    report.observed["stable_sF_nh"] = str(static_cast<std::uint64_t>(st.stable_digit_sum));
    report.observed["bound"] = std::to_string(midpoint([&](mpfr_prec_t p) {
        return (Interval::of(static_cast<long>(h), p) * Interval::log(Natural(9), p) / Interval::log_phi(p) +
                Interval::of(3L, p)) *
               Interval::of(4L * h + 1, p);
    }));
    WitnessLog log;
    for (int k = k_min; k <= k_max; ++k) {
        const bool ok = lower_power_upper_bound(k, h);
        auto make = [&] {
            return Witness{"k=" + str(k), "sF(n^" + str(h) + ")<=" + report.observed["bound"],
                           "sF(n^" + str(h) + ")=" + str(static_cast<std::uint64_t>(sum_of_digits(power(lower_family(k).n, h))))};
        };
        if (ok)
            log.pass(make);
        else
            log.fail(make());
    }
    log.finish(report);
    return report;
}

ClaimReport verify_hexp_identity(int k_min, int k_max, unsigned h_min, unsigned h_max)
{
    ClaimReport report = new_report("hexp-identity", "k", k_min, k_max);
    report.params = {{"h_min", h_min}, {"h_max", h_max}};
    WitnessLog log;
    for (unsigned h = h_min; h <= h_max; ++h) {
        for (int k = k_min; k <= k_max; ++k) {
            const int step = 2 * k - 1;
            const int top = static_cast<int>(h) * step;
            const Int lhs = power(lucas(step), h);
            const Int rem = hexp_remainder(k, h);
            const Int rhs = fib(top + 1) + fib(top - 1) - rem;
            Int cap;
            mpz_ui_pow_ui(cap.get_mpz_t(), 2, h - 1);
            cap *= lucas((static_cast<int>(h) - 2) * step);
            const bool ok = lhs == rhs && sgn(rem) > 0 && rem <= cap;
            auto make = [&] {
                return Witness{"k=" + str(k) + ",h=" + str(h), "identity, 0 < R <= 2^(h-1) L_(h-2)(2k-1)",
                               "R=" + str(rem) + (lhs == rhs ? "" : ",identity broken")};
            };
            if (ok)
                log.pass(make);
            else
                log.fail(make());
        }
    }
    log.finish(report);
    return report;
}

ClaimReport verify_upper_power_bound(const std::vector<unsigned>& hs, int k_max)
{
    ClaimReport report = new_report("upper-power-lower-bound", "k", 1, k_max);
    WitnessLog log;
    for (unsigned h : hs) {
        const auto t = discover_threshold(1, k_max, [&](int k) { return upper_power_lower_bound(k, h); });
        if (!t) {
            log.fail({"h=" + str(h) + ",k=" + str(k_max), "sF >= 2k - 3h/4 - 3", "bound fails at k_max"});
            continue;
        }
        report.discovered_thresholds["k_min_h" + str(h)] = *t;
        report.observed["excluded_h" + str(h)] = str(*t - 1);
        for (int k = *t; k <= k_max; ++k) {
            log.pass([&] {
                const auto s = sum_of_digits(power(upper_family(k).n, h));
                return Witness{"h=" + str(h) + ",k=" + str(k), "sF >= " + str(frac(8L * k - 3L * h - 12, 4)),
                               "sF=" + str(static_cast<std::uint64_t>(s))};
            });
        }
    }
    log.finish(report);
    return report;
}

std::vector<ClaimReport> verify_lucasmulti(std::uint64_t m_max, int window)
{
    ClaimReport count_report = new_report("lucasmulti", "m", 1, static_cast<std::int64_t>(m_max));
    ClaimReport length_report = new_report("blocklength", "m", 1, static_cast<std::int64_t>(m_max));
    count_report.params = length_report.params = {{"window", window}};
    WitnessLog counts, lengths;
    int k0_max = 0;
    for (std::uint64_t mu = 1; mu <= m_max; ++mu) {
        const Natural m = from_u64(mu);
        const int k0 = lucas_multiple_threshold(m);
        k0_max = std::max(k0_max, k0);
        if (mu <= 10)
            count_report.discovered_thresholds["k0_m" + str(mu)] = k0;
        std::optional<std::size_t> first;
        bool constant = true, below = true, short_enough = true, agree = true;
        std::size_t last = 0, longest = 0;
        for (int k = k0; k <= k0 + window; ++k) {
            const std::size_t c = sum_of_digits(m * lucas(k));
            const auto blocks = multiple_to_blocks(m, k);
            agree = agree && blocks.front().ones() == c;
            if (!first)
                first = c;
            constant = constant && c == *first;
            last = c;
            const long len = static_cast<long>(blocks.front().length());
            longest = std::max<std::size_t>(longest, static_cast<std::size_t>(len));
            // c < log m / log phi + 3
            below = below && certified_sign([&](mpfr_prec_t p) {
                            return Interval::log(m, p) / Interval::log_phi(p) + Interval::of(3L, p) -
                                   Interval::of(static_cast<long>(c), p);
                        }) > 0;
            // len <= 2 log(sqrt5 m) / log phi + 2
            short_enough = short_enough && certified_sign([&](mpfr_prec_t p) {
                                               Interval log_sqrt5m = Interval::log(Natural(5), p) / Interval::of(2L, p) +
                                                                     Interval::log(m, p);
                                               return Interval::of(2L, p) * log_sqrt5m / Interval::log_phi(p) +
                                                      Interval::of(2L - len, p);
                                           }) >= 0;
        }
        const std::string input = "m=" + str(mu) + ",k=" + str(k0) + ".." + str(k0 + window);
        auto make_count = [&] {
            return Witness{input, "constant sF < log m/log phi + 3",
                           "sF=" + str(static_cast<std::uint64_t>(last)) + (constant ? "" : " (varies)") +
                               (agree ? "" : " (blocks disagree)")};
        };
        if (constant && below && agree)
            counts.pass(make_count);
        else
            counts.fail(make_count());
        auto make_len = [&] {
            return Witness{input, "block length <= 2 log(sqrt5 m)/log phi + 2",
                           "length=" + str(static_cast<std::uint64_t>(longest))};
        };
        if (short_enough)
            lengths.pass(make_len);
        else
            lengths.fail(make_len());
    }
    count_report.discovered_thresholds["k0_max"] = k0_max;
    counts.finish(count_report);
    lengths.finish(length_report);
    return {count_report, length_report};
}

ClaimReport verify_fibcoro(unsigned h, int N_min, int N_max)
{
    ClaimReport report = new_report("fibcoro", "N", N_min, N_max);
    const long bound = 130L * h * h;
    report.params = {{"h", h}, {"bound", bound}};
    const LowerStabilisation st = lower_stabilisation(h);
    const int n0 = st.k_min + 6;
    report.discovered_thresholds["N0"] = n0;
    WitnessLog log;
    for (int N = N_min; N <= N_max; ++N) {
        if (N < n0) {
            log.skip();
            continue;
        }
        try {
            const FamilyMember w = fibcoro_witness(N, h);
            log.pass([&] {
                return Witness{"N=" + str(N), "sF(n)=" + str(N) + ",sF(n^" + str(h) + ")<=" + str(bound),
                               "sF(n)=" + str(static_cast<std::uint64_t>(sum_of_digits(w.n))) + ",sF(n^" + str(h) +
                                   ")=" + str(static_cast<std::uint64_t>(sum_of_digits(power(w.n, h))))};
            });
        } catch (const Error& e) {
            log.fail({"N=" + str(N), "witness", e.what()});
        }
    }
    log.finish(report);
    report.observed["below_threshold"] = str(log.skipped());
    mark_below_threshold_if_empty(report, log, {"N=" + str(N_min) + ".." + str(N_max), "N >= " + str(n0), "all N below N0"});
    return report;
}

namespace {

LucasForm random_form(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> n_terms(0, 4), index(1, 60), coef(-100, 100);
    std::vector<std::pair<int, Int>> terms;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(index(rng), Int(coef(rng)));
    return LucasForm(terms, Int(coef(rng)));
}

} // namespace

ClaimReport verify_homomorphism(unsigned trials, std::uint64_t seed)
{
    ClaimReport report = new_report("lucas-mul-homomorphism", "trial", 1, trials);
    report.params = {{"seed", static_cast<std::int64_t>(seed)}, {"max_index", 60}, {"max_coefficient", 100}};
    std::mt19937_64 rng(seed);
    WitnessLog log;
    for (unsigned t = 1; t <= trials; ++t) {
        const LucasForm f = random_form(rng);
        const LucasForm g = random_form(rng);
        const LucasForm fg = f * g;
        const bool ok = fg.value() == f.value() * g.value() && fg == g * f;
        auto make = [&] {
            return Witness{f.to_string() + " * " + g.to_string(), Int(f.value() * g.value()).get_str(),
                           fg.value().get_str()};
        };
        if (ok)
            log.pass(make);
        else
            log.fail(make());
    }
    log.finish(report);
    return report;
}

ClaimReport verify_powerformula(int k_max, unsigned h_max)
{
    ClaimReport report = new_report("powerformula", "k", 1, k_max);
    report.params = {{"h_min", 2}, {"h_max", h_max}};
    WitnessLog log;
    std::uint64_t identical = 0;
    for (int k = 1; k <= k_max; ++k) {
        for (unsigned h = 2; h <= h_max; ++h) {
            const Int exact = power(lucas(k), h);
            const std::string input = "k=" + str(k) + ",h=" + str(h);
            try {
                const LucasForm direct = lucas_power_direct(k, h);
                const LucasForm paired = lucas_power_paired(k, h);
                const LucasForm repeated = pow(LucasForm::lucas(k), h);
                const bool ok = direct.value() == exact && paired.value() == exact && repeated.value() == exact;
                identical += direct == repeated && direct == paired ? 1 : 0;
                auto make = [&] { return Witness{input, exact.get_str(), direct.to_string()}; };
                if (ok)
                    log.pass(make);
                else
                    log.fail(make());
            } catch (const Error& e) {
                log.fail({input, "integral halved sum", e.what()});
            }
        }
    }
    log.finish(report);
    report.observed["identical_canonical_forms"] = str(identical);
    return report;
}

std::vector<ClaimReport> verify_io_witnesses(unsigned h, int k_max)
{
    constexpr std::uint64_t kRequired = 10;
    ClaimReport up = new_report("c3dot-witnesses", "k", 2, k_max);
    ClaimReport down = new_report("c4dot-witnesses", "k", 1, k_max);
    const long c4p = 120L * h * h;
    up.params = {{"h", h}, {"c3_prime", 1}, {"required", kRequired}};
    down.params = {{"h", h}, {"c4_prime", c4p}, {"required", kRequired}};

    auto tally = [&](ClaimReport& report, int k_lo, auto family, auto holds, const std::string& claim) {
        std::uint64_t found = 0;
        std::vector<Witness> samples;
        for (int k = k_lo; k <= k_max; ++k) {
            const Natural n = family(k);
            const auto a = static_cast<long>(sum_of_digits(power(n, h)));
            const auto b = static_cast<long>(sum_of_digits(n));
            if (holds(n, a, b)) {
                ++found;
                if (samples.size() < WitnessLog::kMaxSamples)
                    samples.push_back({"k=" + str(k), claim, "ratio=" + str(a) + "/" + str(b)});
            }
        }
        report.cases = static_cast<std::uint64_t>(std::max(0, k_max - k_lo + 1));
        report.observed["witnesses"] = str(found);
        if (found < kRequired) {
            report.status = ClaimStatus::Fail;
            report.failures = 1;
            report.witnesses = {{"k=" + str(k_lo) + ".." + str(k_max), ">= " + str(kRequired) + " witnesses",
                                 str(found) + " witnesses"}};
        } else {
            report.witnesses = std::move(samples);
        }
    };

    tally(
        up, 2, [](int k) { return upper_family(k).n; },
        [](const Natural& n, long a, long b) {
            return certified_sign([&](mpfr_prec_t p) {
                       return Interval::of(a, p) - Interval::of(b, p) * Interval::log(n, p);
                   }) > 0;
        },
        "ratio > log n");
    tally(
        down, 1, [](int k) { return lower_family(k).n; },
        [&](const Natural& n, long a, long b) {
            return certified_sign([&](mpfr_prec_t p) {
                       return Interval::of(c4p * b, p) - Interval::of(a, p) * Interval::log(n, p);
                   }) > 0;
        },
        "ratio < " + str(c4p) + "/log n");
    return {up, down};
}

// --- registry ---------------------------------------------------------------

const std::vector<TargetInfo>& verification_targets()
{
    static const std::vector<TargetInfo> targets = {
        {"minimality", "greedy s_F equals the coin-change minimum for 1 <= x <= n-max (10^4)"},
        {"subadditivity", "s_F(a+b) <= s_F(a)+s_F(b) for a,b <= n-max (2000); s_F not submultiplicative"},
        {"linear", "s_F(n_k) = k+6 with low digits F_2,F_4,..,F_{2k-2},F_{2k+1} (k 3..40)"},
        {"squares", "s_F(n_k^2) = 26 (k 7..40) and the nine-block expansion of n_k^2 (k 7..30)"},
        {"cubes", "s_F(n_k^3) = 60 (k 10..30) and the thirteen-block expansion of n_k^3 (k 10..25)"},
        {"lower-power", "s_F(n_k^h) <= (h log 9/log phi + 3)(4h+1) past stabilisation (h 2..4)"},
        {"hexp", "L_{2k-1}^h = F_{h(2k-1)+1}+F_{h(2k-1)-1}-R with 0<R bounded; s_F >= 2k-3h/4-3"},
        {"thm2-bounds", "1/(2 log n) <= s_F(n^h)/s_F(n) <= 2h log n (h=2 to 10^5, h=3 to 10^4)"},
        {"lemma-expand", "s_F(F_{2k+1}-z) and s_F(F_{2k}-z) identities and bound (k <= 12)"},
        {"lucasmulti", "s_F(m L_k) constant and < log m/log phi + 3 past k_0(m); block length (m <= 200)"},
        {"fibcoro", "n with N digits and s_F(n^h) <= 130h^2 (h=2: N 13..40, h=3: N 16..35)"},
        {"homomorphism", "value(f*g) = value(f)value(g) on 1000 random Lucas forms"},
        {"powerformula", "closed binomial expansion of L_k^h equals repeated products (k <= 15, h <= 6)"},
        {"io-witnesses", "at least 10 n with ratio > log n and 10 with ratio < 120h^2/log n (h=2,3)"},
        {"count-small", "#{n<N: ratio < eps} vs constructed members (N=10^5, h=2, eps=1/2)"},
        {"count-large", "#{n<N: ratio > delta} vs constructed members (N=10^5, h=2, delta=4)"},
    };
    return targets;
}

std::vector<ClaimReport> run_target(std::string_view target, const Params& params)
{
    auto append = [](std::vector<ClaimReport>& out, std::vector<ClaimReport> more) {
        for (auto& r : more)
            out.push_back(std::move(r));
    };
    auto k_lo = [&](int d) { return params.k_min.value_or(d); };
    auto k_hi = [&](int d) { return params.k_max.value_or(d); };
    auto n_hi = [&](std::uint64_t d) { return params.n_max.value_or(d); };
    auto check_range = [](int lo, int hi) {
        if (lo < 1 || hi < lo)
            throw Error(ErrorCode::OutOfRange, "invalid k range " + std::to_string(lo) + ".." + std::to_string(hi));
    };
    auto small_int = [](const Natural& m) {
        if (!fits_u64(m))
            throw Error(ErrorCode::OutOfRange, "m too large");
        return to_u64(m);
    };

    std::vector<ClaimReport> out;
    if (target == "all") {
        for (const auto& t : verification_targets())
            append(out, run_target(t.name, params));
        return out;
    }
    if (target == "minimality") {
        out.push_back(verify_minimality(n_hi(10000)));
    } else if (target == "subadditivity") {
        append(out, verify_subadditivity(n_hi(2000)));
    } else if (target == "linear") {
        check_range(k_lo(3), k_hi(40));
        out.push_back(verify_linear(k_lo(3), k_hi(40)));
    } else if (target == "squares" || target == "cubes") {
        const bool sq = target == "squares";
        const int lo = k_lo(sq ? 7 : 10);
        check_range(lo, k_hi(sq ? 40 : 30));
        out.push_back(verify_power_digit_sum(sq ? 2 : 3, lo, k_hi(sq ? 40 : 30), sq ? 26 : 60));
        out.push_back(verify_blocks(sq ? 2 : 3, lo, k_hi(sq ? 30 : 25)));
    } else if (target == "lower-power") {
        std::vector<unsigned> hs = params.h ? std::vector<unsigned>{*params.h} : std::vector<unsigned>{2, 3, 4};
        for (unsigned h : hs) {
            const LowerStabilisation st = lower_stabilisation(h);
            check_range(k_lo(st.k_min), k_hi(st.k_reference));
            out.push_back(verify_lower_power_bound(h, k_lo(st.k_min), k_hi(st.k_reference)));
        }
    } else if (target == "hexp") {
        const unsigned h_lo = params.h.value_or(2);
        const unsigned h_hi = params.h.value_or(5);
        if (h_lo < 2)
            throw Error(ErrorCode::OutOfRange, "hexp needs h >= 2");
        check_range(k_lo(3), k_hi(25));
        out.push_back(verify_hexp_identity(k_lo(3), k_hi(25), h_lo, h_hi));
        std::vector<unsigned> hs;
        for (unsigned h = h_lo; h <= h_hi; ++h)
            hs.push_back(h);
        out.push_back(verify_upper_power_bound(hs, k_hi(30)));
    } else if (target == "thm2-bounds") {
        if (params.h) {
            out.push_back(scan_ratio_bounds(n_hi(*params.h == 2 ? 100000 : 10000), *params.h, params.jobs));
        } else {
            out.push_back(scan_ratio_bounds(n_hi(100000), 2, params.jobs));
            out.push_back(scan_ratio_bounds(n_hi(10000), 3, params.jobs));
        }
    } else if (target == "lemma-expand") {
        append(out, verify_lemma_expand(k_hi(12), params.jobs));
    } else if (target == "lucasmulti") {
        append(out, verify_lucasmulti(params.m ? small_int(*params.m) : 200, 20));
    } else if (target == "fibcoro") {
        if (!params.h || *params.h == 2)
            out.push_back(verify_fibcoro(2, k_lo(13), k_hi(40)));
        if (!params.h || *params.h == 3)
            out.push_back(verify_fibcoro(3, k_lo(16), k_hi(35)));
        if (params.h && *params.h != 2 && *params.h != 3) {
            const int n0 = lower_stabilisation(*params.h).k_min + 6;
            out.push_back(verify_fibcoro(*params.h, k_lo(n0), k_hi(n0 + 20)));
        }
    } else if (target == "homomorphism") {
        out.push_back(verify_homomorphism(static_cast<unsigned>(n_hi(1000)), params.seed));
    } else if (target == "powerformula") {
        out.push_back(verify_powerformula(k_hi(15), params.h.value_or(6)));
    } else if (target == "io-witnesses") {
        for (unsigned h : params.h ? std::vector<unsigned>{*params.h} : std::vector<unsigned>{2, 3})
            append(out, verify_io_witnesses(h, k_hi(60)));
    } else if (target == "count-small") {
        out.push_back(verify_count_small(n_hi(100000), params.h.value_or(2), params.eps.value_or(frac(1, 2)),
                                         params.jobs));
    } else if (target == "count-large") {
        out.push_back(verify_count_large(n_hi(100000), params.h.value_or(2), params.delta.value_or(Rational(4)),
                                         params.jobs));
    } else {
        throw Error(ErrorCode::UnknownClaim, "unknown claim id '" + std::string(target) + "'");
    }
    return out;
}

// --- rendering --------------------------------------------------------------

namespace {

json report_json(const ClaimReport& r)
{
    json j;
    j["claim_id"] = r.claim_id;
    j["status"] = std::string(status_name(r.status));
    json params = json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    j["params"] = params;
    j["range_tested"] = {{"variable", r.range_tested.variable}, {"min", r.range_tested.min}, {"max", r.range_tested.max}};
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    json thresholds = json::object();
    for (const auto& [k, v] : r.discovered_thresholds)
        thresholds[k] = v;
    j["discovered_thresholds"] = thresholds;
    json observed = json::object();
    for (const auto& [k, v] : r.observed)
        observed[k] = v;
    j["observed"] = observed;
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"input", w.input}, {"expected", w.expected}, {"actual", w.actual}});
    j["witnesses"] = witnesses;
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

} // namespace

std::string reports_to_json(const std::vector<ClaimReport>& reports)
{
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<ClaimReport>& reports)
{
    std::string out = "claim_id,status,input,expected,actual\n";
    for (const auto& r : reports) {
        for (const auto& w : r.witnesses) {
            out += csv_field(r.claim_id) + "," + std::string(status_name(r.status)) + "," + csv_field(w.input) + "," +
                   csv_field(w.expected) + "," + csv_field(w.actual) + "\n";
        }
    }
    return out;
}

std::string reports_to_text(const std::vector<ClaimReport>& reports)
{
    std::ostringstream os;
    for (const auto& r : reports) {
        std::string status(status_name(r.status));
        std::transform(status.begin(), status.end(), status.begin(), [](char c) { return c == '-' ? '_' : static_cast<char>(std::toupper(c)); });
        os << status << "  " << r.claim_id << "  " << r.range_tested.variable << "=" << r.range_tested.min << ".."
           << r.range_tested.max << "  cases=" << r.cases;
        if (r.failures)
            os << "  failures=" << r.failures;
        os << "\n";
        for (const auto& [k, v] : r.discovered_thresholds)
            os << "    threshold " << k << " = " << v << "\n";
        for (const auto& [k, v] : r.observed)
            os << "    observed " << k << " = " << v << "\n";
        if (r.status != ClaimStatus::Pass) {
            for (const auto& w : r.witnesses)
                os << "    witness " << w.input << ": expected " << w.expected << ", got " << w.actual << "\n";
        }
    }
    return os.str();
}

std::vector<RatioRow> ratio_table(std::uint64_t n_min, std::uint64_t n_max, unsigned h, unsigned jobs)
{
    if (n_min < 2 || n_max < n_min)
        throw Error(ErrorCode::OutOfRange, "ratio table needs 2 <= n_min <= n_max");
    if (n_max - n_min > 10000000)
        throw Error(ErrorCode::OutOfRange, "ratio table limited to 10^7 rows");
    auto parts = detail::run_chunks(n_min, n_max + 1, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<RatioRow> rows;
        rows.reserve(hi - lo);
        for (std::uint64_t n = lo; n < hi; ++n)
            rows.push_back({n, sum_of_digits(n), sum_of_digits_of_power(n, h)});
        return rows;
    });
    std::vector<RatioRow> rows;
    for (auto& p : parts)
        rows.insert(rows.end(), p.begin(), p.end());
    return rows;
}

std::string ratio_table_to_string(const std::vector<RatioRow>& rows, unsigned h, Format format)
{
    auto ratio_of = [](const RatioRow& r) { return static_cast<double>(r.digits_power) / static_cast<double>(r.digits_n); };
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"sF_n", r.digits_n}, {"sF_nh", r.digits_power}, {"h", h}, {"ratio", fixed(ratio_of(r), 6)}});
        return arr.dump(2) + "\n";
    }
    std::string out = format == Format::Csv ? "n,h,sF_n,sF_nh,ratio\n" : "";
    for (const auto& r : rows) {
        if (format == Format::Csv)
            out += str(r.n) + "," + str(h) + "," + str(static_cast<std::uint64_t>(r.digits_n)) + "," +
                   str(static_cast<std::uint64_t>(r.digits_power)) + "," + fixed(ratio_of(r), 6) + "\n";
        else
            out += "n=" + str(r.n) + "  sF(n)=" + str(static_cast<std::uint64_t>(r.digits_n)) + "  sF(n^" + str(h) +
                   ")=" + str(static_cast<std::uint64_t>(r.digits_power)) + "  ratio=" + fixed(ratio_of(r), 6) + "\n";
    }
    return out;
}

std::string members_to_string(const std::vector<FamilyMember>& members, unsigned h_max, Format format)
{
    auto digit_sums = [&](const FamilyMember& mem) {
        std::vector<std::pair<unsigned, std::size_t>> out;
        for (unsigned h = 2; h <= h_max; ++h)
            out.emplace_back(h, sum_of_digits(power(mem.n, h)));
        return out;
    };
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& mem : members) {
            json powers = json::object();
            for (const auto& [h, s] : digit_sums(mem))
                powers[str(h)] = s;
            arr.push_back({{"family", std::string(family_name(mem.family))},
                           {"k", mem.k},
                           {"m", mem.m.get_str()},
                           {"n", mem.n.get_str()},
                           {"form", mem.form.to_string()},
                           {"sF_n", sum_of_digits(mem.n)},
                           {"sF_nh", powers}});
        }
        return arr.dump(2) + "\n";
    }
    std::string out;
    if (format == Format::Csv) {
        out = "family,k,m,n,sF_n";
        for (unsigned h = 2; h <= h_max; ++h)
            out += ",sF_n" + str(h);
        out += "\n";
    }
    for (const auto& mem : members) {
        if (format == Format::Csv) {
            out += std::string(family_name(mem.family)) + "," + str(mem.k) + "," + mem.m.get_str() + "," +
                   mem.n.get_str() + "," + str(static_cast<std::uint64_t>(sum_of_digits(mem.n)));
            for (const auto& [h, s] : digit_sums(mem))
                out += "," + str(static_cast<std::uint64_t>(s));
            out += "\n";
        } else {
            out += std::string(family_name(mem.family)) + " k=" + str(mem.k) + " m=" + mem.m.get_str() + "\n";
            out += "  n = " + mem.n.get_str() + "\n";
            out += "  form = " + mem.form.to_string() + "\n";
            out += "  sF(n) = " + str(static_cast<std::uint64_t>(sum_of_digits(mem.n))) + "\n";
            for (const auto& [h, s] : digit_sums(mem))
                out += "  sF(n^" + str(h) + ") = " + str(static_cast<std::uint64_t>(s)) + "\n";
        }
    }
    return out;
}

} // namespace zeck

#include "zeck/constructions.hpp"

#include <map>
#include <mutex>
#include <string>

#include "zeck/fib_core.hpp"

namespace zeck {

namespace {

void require_k(int k)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "family index k must be >= 1, got " + std::to_string(k));
}

void require_m(const Natural& m)
{
    if (sgn(m) <= 0)
        throw Error(ErrorCode::InvalidArgument, "multiplier m must be >= 1");
}

Int power(const Int& base, unsigned h)
{
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), h);
    return out;
}

struct BlockSpec {
    const char* digits;
    int slope; // offset = slope * k + shift
    int shift;
};

std::vector<FibBlock> instantiate(const std::vector<BlockSpec>& specs, int k)
{
    std::vector<FibBlock> out;
    out.reserve(specs.size());
    for (const auto& s : specs)
        out.emplace_back(s.digits, s.slope * k + s.shift);
    return out;
}

} // namespace

std::string_view family_name(Family family)
{
    switch (family) {
    case Family::Upper:
        return "upper";
    case Family::Lower:
        return "lower";
    case Family::Thm4:
        return "thm4";
    case Family::Thm5:
        return "thm5";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::Upper, Family::Lower, Family::Thm4, Family::Thm5}) {
        if (family_name(f) == name)
            return f;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

LucasForm lower_family_form(int k)
{
    require_k(k);
    const Int one(1);
    return LucasForm({{8 * k, one}, {6 * k, one}, {4 * k, one}, {2 * k, one}}, Int(-1));
}

FamilyMember upper_family(int k)
{
    require_k(k);
    LucasForm form = LucasForm::lucas(2 * k - 1);
    Natural n = form.value();
    return {Family::Upper, k, Natural(1), std::move(n), std::move(form)};
}

FamilyMember lower_family(int k)
{
    LucasForm form = lower_family_form(k);
    Natural n = form.value();
    return {Family::Lower, k, Natural(1), std::move(n), std::move(form)};
}

FamilyMember thm4_family(const Natural& m, int k)
{
    require_m(m);
    LucasForm form = m * lower_family_form(k);
    Natural n = form.value();
    return {Family::Thm4, k, m, std::move(n), std::move(form)};
}

FamilyMember thm5_family(const Natural& m, int k)
{
    require_m(m);
    require_k(k);
    LucasForm form = m * LucasForm::lucas(2 * k - 1);
    Natural n = form.value();
    return {Family::Thm5, k, m, std::move(n), std::move(form)};
}

FamilyMember make_member(Family family, const Natural& m, int k)
{
    switch (family) {
    case Family::Upper:
        if (m != 1)
            throw Error(ErrorCode::InvalidArgument, "the upper family takes no multiplier");
        return upper_family(k);
    case Family::Lower:
        if (m != 1)
            throw Error(ErrorCode::InvalidArgument, "the lower family takes no multiplier");
        return lower_family(k);
    case Family::Thm4:
        return thm4_family(m, k);
    case Family::Thm5:
        return thm5_family(m, k);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

std::vector<FibBlock> squares_blocks(int k)
{
    static const std::vector<BlockSpec> specs = {
        {"101", 16, -1},        {"1000001", 14, -3}, {"1010101", 12, -3},
        {"1001001001", 10, -5}, {"101", 8, -1},      {"1000001", 6, -3},
        {"1010101", 4, -3},     {"1001001001", 2, -5}, {"10001", 0, 2},
    };
    return instantiate(specs, k);
}

std::vector<FibBlock> cubes_blocks(int k)
{
    static const std::vector<BlockSpec> specs = {
        {"101", 24, -1},
        {"1010101", 22, -3},
        {"10001010001", 20, -5},
        {"10010000001001", 18, -7},
        {"10000100101001", 16, -7},
        {"10000100101001", 14, -7},
        {"10010000001001", 12, -7},
        {"10100100100001", 10, -7},
        {"100100010100001001", 8, -9},
        {"100101000001001001", 6, -9},
        {"100100010100001001", 4, -9},
        {"100001010100101001", 2, -9},
        {"10100", 0, 2},
    };
    return instantiate(specs, k);
}

bool upper_power_lower_bound(int k, unsigned h)
{
    const std::size_t s = sum_of_digits(power(upper_family(k).n, h));
    // s >= 2k - 3h/4 - 3  <=>  4s >= 8k - 3h - 12
    return 4L * static_cast<long>(s) >= 8L * k - 3L * static_cast<long>(h) - 12L;
}

bool lower_power_upper_bound(int k, unsigned h)
{
    const auto s = static_cast<long>(sum_of_digits(power(lower_family(k).n, h)));
    const long hh = static_cast<long>(h);
    const int sign = certified_sign([&](mpfr_prec_t p) {
        Interval bound = (Interval::of(hh, p) * Interval::log(Natural(9), p) / Interval::log_phi(p) +
                          Interval::of(3L, p)) *
                         Interval::of(4 * hh + 1, p);
        return bound - Interval::of(s, p);
    });
    return sign >= 0;
}

Int hexp_remainder(int k, unsigned h)
{
    require_k(k);
    if (h < 2)
        throw Error(ErrorCode::InvalidArgument, "hexp remainder needs h >= 2");
    const long step = 2L * k - 1;
    Int doubled = 0;
    for (unsigned i = 1; i < h; ++i) {
        Int c;
        mpz_bin_uiui(c.get_mpz_t(), h, i);
        const long sign_exp = static_cast<long>(i + 1) * step;
        const long index = (static_cast<long>(h) - 2L * i) * step;
        Int term = c * lucas(static_cast<int>(index), true);
        doubled += sign_exp % 2 == 0 ? term : Int(-term);
    }
    if (mpz_odd_p(doubled.get_mpz_t()))
        throw Error(ErrorCode::Defect, "hexp remainder sum is odd");
    return doubled / 2;
}

LowerStabilisation lower_stabilisation(unsigned h)
{
    if (h < 1)
        throw Error(ErrorCode::InvalidArgument, "exponent must be >= 1");
    static std::mutex mutex;
    static std::map<unsigned, LowerStabilisation> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(h); it != memo.end())
            return it->second;
    }

    const int reference = std::max(30, 6 * static_cast<int>(h) + 20);
    const std::size_t stable = sum_of_digits(power(lower_family(reference).n, h));
    auto holds = [&](int k) {
        const Natural n = lower_family(k).n;
        return sum_of_digits(n) == static_cast<std::size_t>(k + 6) && sum_of_digits(power(n, h)) == stable;
    };
    const auto k_min = discover_threshold(1, reference, holds);
    if (!k_min)
        throw Error(ErrorCode::Defect, "lower family does not stabilise at the reference index");
    LowerStabilisation result{*k_min, reference, stable};

    std::lock_guard lock(mutex);
    memo.emplace(h, result);
    return result;
}

FamilyMember fibcoro_witness(int N, unsigned h)
{
    if (h < 2)
        throw Error(ErrorCode::InvalidArgument, "fibcoro_witness needs h >= 2");
    const LowerStabilisation st = lower_stabilisation(h);
    const int n0 = st.k_min + 6;
    if (N < n0)
        throw Error(ErrorCode::BelowThreshold,
                    "N = " + std::to_string(N) + " is below N_0(" + std::to_string(h) + ") = " + std::to_string(n0));
    FamilyMember member = lower_family(N - 6);
    const std::size_t digits = sum_of_digits(member.n);
    const std::size_t power_digits = sum_of_digits(power(member.n, h));
    if (digits != static_cast<std::size_t>(N) || power_digits > 130UL * h * h)
        throw Error(ErrorCode::Defect, "witness for N = " + std::to_string(N) + " violates its digit counts");
    return member;
}

int lucas_multiple_threshold(const Natural& m)
{
    require_m(m);
    constexpr int kSearchLimit = 100000;
    for (int k = 1; k <= kSearchLimit; ++k) {
        try {
            const auto blocks = multiple_to_blocks(m, k);
            if (blocks.front().one_indices() == encode(m * lucas(k)).indices())
                return k;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Interfering)
                throw;
        }
    }
    throw Error(ErrorCode::Defect, "no stabilisation index found for m = " + m.get_str());
}

} // namespace zeck

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/lucas_algebra.hpp"
#include "zeck/numeric.hpp"
#include "zeck/zeckendorf.hpp"

namespace zeck {

enum class Family { Upper, Lower, Thm4, Thm5 };

std::string_view family_name(Family family);
/// Accepts "upper", "lower", "thm4", "thm5".
Family parse_family(std::string_view name);

/// One member of an extremal family. form.value() == n always.
struct FamilyMember {
    Family family;
    int k;
    Natural m;
    Natural n;
    LucasForm form;
};

/// n_k = L_{2k-1}. s_F(n_k) = 2 for k >= 2.
FamilyMember upper_family(int k);
/// n_k = L_{8k} + L_{6k} + L_{4k} + L_{2k} - 1.
FamilyMember lower_family(int k);
/// n_k(m) = m * (L_{8k} + L_{6k} + L_{4k} + L_{2k} - 1).
FamilyMember thm4_family(const Natural& m, int k);
/// n_k(m) = m * L_{2k-1}.
FamilyMember thm5_family(const Natural& m, int k);
FamilyMember make_member(Family family, const Natural& m, int k);

/// The form L_{8k}+L_{6k}+L_{4k}+L_{2k}-1 on its own.
LucasForm lower_family_form(int k);

/// The literal block lists for n_k^2 (nine blocks, k >= 4) and n_k^3
/// (thirteen blocks, k >= 6), exactly as tabulated for the lower family.
/// Smaller k would push a block offset below 2 and throws InvalidArgument.
std::vector<FibBlock> squares_blocks(int k);
std::vector<FibBlock> cubes_blocks(int k);

/// s_F(L_{2k-1}^h) >= 2k - 3h/4 - 3, decided exactly.
bool upper_power_lower_bound(int k, unsigned h);
/// s_F(lower_family(k).n^h) <= (h log 9 / log phi + 3)(4h + 1), certified.
bool lower_power_upper_bound(int k, unsigned h);

/// The remainder R in L_{2k-1}^h = F_{h(2k-1)+1} + F_{h(2k-1)-1} - R, namely
/// (1/2) sum_{i=1}^{h-1} C(h,i) (-1)^{(i+1)(2k-1)} L_{(h-2i)(2k-1)}.
Int hexp_remainder(int k, unsigned h);

/// Smallest k0 in [k_lo, k_hi] such that pred(k) holds for every k in
/// [k0, k_hi]; nullopt if pred(k_hi) fails.
template <typename Pred>
std::optional<int> discover_threshold(int k_lo, int k_hi, Pred&& pred)
{
    std::optional<int> found;
    for (int k = k_hi; k >= k_lo; --k) {
        if (!pred(k))
            break;
        found = k;
    }
    return found;
}

/// Lower-family stabilisation for exponent h: the smallest k such that for
/// every k' from k to a reference index, s_F(n_{k'}) = k' + 6 and
/// s_F(n_{k'}^h) equals its value at the reference. The reference index
/// grows with h so that the power's blocks are well separated.
struct LowerStabilisation {
    int k_min;
    int k_reference;
    std::size_t stable_digit_sum;
};
LowerStabilisation lower_stabilisation(unsigned h);

/// lower_family(N - 6) with s_F(n) = N and s_F(n^h) <= 130 h^2 asserted.
/// Throws ErrorCode::BelowThreshold when N - 6 is below the discovered
/// stabilisation index for h.
FamilyMember fibcoro_witness(int N, unsigned h);

/// Discovered k_0(m) for the multiple-of-Lucas expansion: the smallest k for
/// which multiple_to_blocks(m, k) succeeds and agrees digit for digit with
/// the greedy expansion of m * L_k.
int lucas_multiple_threshold(const Natural& m);

} // namespace zeck

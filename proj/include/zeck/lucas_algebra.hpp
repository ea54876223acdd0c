#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zeck/numeric.hpp"
#include "zeck/zeckendorf.hpp"

namespace zeck {

/// An integer linear combination of Lucas numbers L_k (k >= 1) plus an
/// integer constant. Canonical: no zero coefficients, L_0 and negative
/// indices folded away on construction.
class LucasForm {
public:
    using Terms = std::map<int, Int, std::greater<>>;

    LucasForm() = default;
    /// Accepts any indices: L_0 contributes 2 * coef to the constant and
    /// L_{-n} = (-1)^n L_n.
    LucasForm(const std::vector<std::pair<int, Int>>& terms, const Int& constant);

    static LucasForm lucas(int k) { return LucasForm({{k, Int(1)}}, Int(0)); }
    static LucasForm constant(const Int& c) { return LucasForm({}, c); }

    const Terms& terms() const noexcept { return terms_; }
    const Int& constant_term() const noexcept { return constant_; }
    /// Coefficient of L_k, zero when absent.
    Int coefficient(int k) const;

    Int value() const;

    /// "L16+2·L14+3·L12+4·L10+L8+2·L6+3·L4+4·L2+9"
    std::string to_string() const;

    friend bool operator==(const LucasForm&, const LucasForm&) = default;

private:
    friend LucasForm operator*(const LucasForm& f, const LucasForm& g);
    friend LucasForm operator+(const LucasForm& f, const LucasForm& g);
    friend LucasForm operator*(const Int& c, const LucasForm& f);

    void add_term(int k, const Int& coef);

    Terms terms_;
    Int constant_ = 0;
};

/// Products expand by L_k L_l = L_{k+l} + (-1)^l L_{k-l} for k > l, and
/// L_k^2 = L_{2k} + (-1)^k 2.
LucasForm operator*(const LucasForm& f, const LucasForm& g);
LucasForm operator+(const LucasForm& f, const LucasForm& g);
LucasForm operator*(const Int& c, const LucasForm& f);

inline LucasForm mul(const LucasForm& f, const LucasForm& g) { return f * g; }
/// Repeated multiplication, h >= 1.
LucasForm pow(const LucasForm& f, unsigned h);

/// L_k^h from the closed binomial expansion (1/2) sum_i C(h,i) (-1)^{ik}
/// L_{(h-2i)k}, evaluated term by term with negative indices. Throws
/// ErrorCode::Defect if the folded sum is not divisible by two.
LucasForm lucas_power_direct(int k, unsigned h);

/// The same expansion with mirror terms paired up front: sum over i < h/2 of
/// C(h,i) (-1)^{ik} L_{(h-2i)k}, plus the middle term C(h,h/2) (-1)^{kh/2}
/// for even h. No halving involved.
LucasForm lucas_power_paired(int k, unsigned h);

/// Zeckendorf expansion of m * L_k built symbolically from the digits of m via
/// F_j L_k = F_{k+j} - (-1)^j F_{k-j}, then normalised with carries. Throws
/// ErrorCode::Interfering when k is too small for the rewrite to stay above
/// F_2.
std::vector<FibBlock> multiple_to_blocks(const Natural& m, int k);

/// s_F(value(f)); value must be non-negative.
std::size_t sum_of_digits(const LucasForm& f);

} // namespace zeck

#include "zeck/lucas_algebra.hpp"

#include <string>

#include "zeck/fib_core.hpp"

namespace zeck {

namespace {

Int binomial(unsigned n, unsigned k)
{
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

int parity_sign(long exponent)
{
    return exponent % 2 == 0 ? 1 : -1;
}

} // namespace

LucasForm::LucasForm(const std::vector<std::pair<int, Int>>& terms, const Int& constant) : constant_(constant)
{
    for (const auto& [k, coef] : terms)
        add_term(k, coef);
}

void LucasForm::add_term(int k, const Int& coef)
{
    if (sgn(coef) == 0)
        return;
    if (k == 0) {
        constant_ += 2 * coef;
        return;
    }
    if (k < 0) {
        add_term(-k, parity_sign(-k) * coef);
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, coef);
    if (!inserted) {
        it->second += coef;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Int LucasForm::coefficient(int k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
}

Int LucasForm::value() const
{
    Int total = constant_;
    for (const auto& [k, coef] : terms_)
        total += coef * zeck::lucas(k);
    return total;
}

std::string LucasForm::to_string() const
{
    std::string out;
    auto append_signed = [&out](const Int& coef) {
        if (sgn(coef) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
    };
    for (const auto& [k, coef] : terms_) {
        append_signed(coef);
        const Int magnitude = abs(coef);
        if (magnitude != 1)
            out += magnitude.get_str() + "·";
        out += "L" + std::to_string(k);
    }
    if (sgn(constant_) != 0 || out.empty()) {
        append_signed(constant_);
        out += Int(abs(constant_)).get_str();
    }
    return out;
}

LucasForm operator*(const LucasForm& f, const LucasForm& g)
{
    LucasForm out;
    for (const auto& [k, a] : f.terms_) {
        for (const auto& [l, b] : g.terms_) {
            const Int ab = a * b;
            const int hi = std::max(k, l);
            const int lo = std::min(k, l);
            out.add_term(hi + lo, ab);
            if (hi == lo)
                out.constant_ += parity_sign(lo) * 2 * ab;
            else
                out.add_term(hi - lo, parity_sign(lo) * ab);
        }
    }
    for (const auto& [k, a] : f.terms_)
        out.add_term(k, a * g.constant_);
    for (const auto& [l, b] : g.terms_)
        out.add_term(l, b * f.constant_);
    out.constant_ += f.constant_ * g.constant_;
    return out;
}

LucasForm operator+(const LucasForm& f, const LucasForm& g)
{
    LucasForm out = f;
    for (const auto& [k, coef] : g.terms_)
        out.add_term(k, coef);
    out.constant_ += g.constant_;
    return out;
}

LucasForm operator*(const Int& c, const LucasForm& f)
{
    LucasForm out;
    for (const auto& [k, coef] : f.terms_)
        out.add_term(k, c * coef);
    out.constant_ = c * f.constant_;
    return out;
}

LucasForm pow(const LucasForm& f, unsigned h)
{
    if (h == 0)
        throw Error(ErrorCode::InvalidArgument, "power of a Lucas form requires h >= 1");
    LucasForm out = f;
    for (unsigned i = 1; i < h; ++i)
        out = out * f;
    return out;
}

LucasForm lucas_power_direct(int k, unsigned h)
{
    if (k < 1 || h < 1)
        throw Error(ErrorCode::InvalidArgument, "lucas_power_direct requires k >= 1 and h >= 1");
    std::vector<std::pair<int, Int>> raw;
    for (unsigned i = 0; i <= h; ++i) {
        const long index = (static_cast<long>(h) - 2L * i) * k;
        raw.emplace_back(static_cast<int>(index), parity_sign(static_cast<long>(i) * k) * binomial(h, i));
    }
    const LucasForm doubled(raw, Int(0));

    std::vector<std::pair<int, Int>> halved;
    for (const auto& [index, coef] : doubled.terms()) {
        if (mpz_odd_p(coef.get_mpz_t()))
            throw Error(ErrorCode::Defect, "odd coefficient " + coef.get_str() + " on L" + std::to_string(index) +
                                               " in the doubled power expansion");
        halved.emplace_back(index, coef / 2);
    }
    if (mpz_odd_p(doubled.constant_term().get_mpz_t()))
        throw Error(ErrorCode::Defect, "odd constant in the doubled power expansion");
    return LucasForm(halved, doubled.constant_term() / 2);
}

LucasForm lucas_power_paired(int k, unsigned h)
{
    if (k < 1 || h < 1)
        throw Error(ErrorCode::InvalidArgument, "lucas_power_paired requires k >= 1 and h >= 1");
    std::vector<std::pair<int, Int>> terms;
    Int constant = 0;
    for (unsigned i = 0; 2 * i < h; ++i) {
        const long index = (static_cast<long>(h) - 2L * i) * k;
        terms.emplace_back(static_cast<int>(index), parity_sign(static_cast<long>(i) * k) * binomial(h, i));
    }
    if (h % 2 == 0)
        constant = parity_sign(static_cast<long>(k) * (h / 2)) * binomial(h, h / 2);
    return LucasForm(terms, constant);
}

std::vector<FibBlock> multiple_to_blocks(const Natural& m, int k)
{
    if (sgn(m) <= 0)
        throw Error(ErrorCode::InvalidArgument, "multiple_to_blocks requires m >= 1");
    auto interfering = [&] {
        return Error(ErrorCode::Interfering, "k = " + std::to_string(k) + " too small for m = " + m.get_str() +
                                                 ": expansion of m*L_k reaches below F_2");
    };

    // Digit counts by absolute Fibonacci index.
    std::map<int, long> count;
    for (int j : encode(m).indices()) {
        if (j % 2 == 1) {
            // F_j L_k = F_{k+j} + F_{k-j}
            if (k - j < 2)
                throw interfering();
            ++count[k + j];
            ++count[k - j];
        } else {
            // F_j L_k = F_{k+j} - F_{k-j} = F_{k-j+1} + F_{k-j+3} + ... + F_{k+j-1}
            if (k - j + 1 < 2)
                throw interfering();
            for (int i = k - j + 1; i <= k + j - 1; i += 2)
                ++count[i];
        }
    }

    // Carry normalisation: 2F_i = F_{i+1} + F_{i-2}, F_i + F_{i+1} = F_{i+2}.
    constexpr int kMaxSteps = 1 << 20;
    for (int step = 0;; ++step) {
        if (step == kMaxSteps)
            throw Error(ErrorCode::Defect, "carry normalisation did not terminate");
        bool changed = false;
        for (auto it = count.begin(); it != count.end(); ++it) {
            const int i = it->first;
            if (it->second >= 2) {
                if (i - 2 < 2)
                    throw interfering();
                it->second -= 2;
                ++count[i + 1];
                ++count[i - 2];
                changed = true;
                break;
            }
            auto next = count.find(i + 1);
            if (it->second >= 1 && next != count.end() && next->second >= 1) {
                --it->second;
                --next->second;
                ++count[i + 2];
                changed = true;
                break;
            }
        }
        std::erase_if(count, [](const auto& kv) { return kv.second == 0; });
        if (!changed)
            break;
    }

    const int low = count.begin()->first;
    const int high = count.rbegin()->first;
    std::string digits(static_cast<std::size_t>(high - low + 1), '0');
    for (const auto& [i, c] : count)
        digits[static_cast<std::size_t>(high - i)] = '1';
    std::vector<FibBlock> blocks{FibBlock(digits, low)};

    if (from_blocks(blocks) != m * lucas(k))
        throw Error(ErrorCode::Defect, "symbolic expansion of m*L_k disagrees with its value");
    return blocks;
}

std::size_t sum_of_digits(const LucasForm& f)
{
    const Int v = f.value();
    if (sgn(v) < 0)
        throw Error(ErrorCode::InvalidArgument, "Lucas form has negative value " + v.get_str());
    return sum_of_digits(v);
}

} // namespace zeck

#include "zeck/numeric.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

namespace zeck {

Natural parse_natural(const std::string& text)
{
    if (text.empty())
        throw Error(ErrorCode::InvalidArgument, "empty number");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw Error(ErrorCode::InvalidArgument, "malformed non-negative integer: '" + text + "'");
    }
    return Natural(text, 10);
}

Rational parse_rational(const std::string& text)
{
    Rational out;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const Natural den = parse_natural(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
        out = Rational(parse_natural(text.substr(0, slash)), den);
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty())
            throw Error(ErrorCode::InvalidArgument, "malformed rational: '" + text + "'");
        Natural scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        out = Rational(parse_natural(whole.empty() ? "0" : whole) * scale + parse_natural(frac), scale);
    } else {
        out = Rational(parse_natural(text));
    }
    out.canonicalize();
    return out;
}

std::string to_decimal(const Int& value)
{
    return value.get_str(10);
}

bool fits_u64(const Natural& x)
{
    return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& x)
{
    if (!fits_u64(x))
        throw Error(ErrorCode::OutOfRange, "value does not fit in 64 bits");
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, x.get_mpz_t());
    return out;
}

Natural from_u64(std::uint64_t v)
{
    Natural out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

// --- Mpfr -------------------------------------------------------------------

Mpfr::Mpfr(mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
    live_ = true;
}

Mpfr::Mpfr(const Mpfr& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    live_ = true;
}

Mpfr::Mpfr(Mpfr&& other) noexcept
{
    // mpfr_t is an array of one struct; moving steals the limb pointer.
    value_[0] = other.value_[0];
    live_ = std::exchange(other.live_, false);
}

Mpfr& Mpfr::operator=(const Mpfr& other)
{
    if (this != &other) {
        if (live_)
            mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        else
            mpfr_init2(value_, mpfr_get_prec(other.value_));
        live_ = true;
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept
{
    if (this != &other) {
        if (live_)
            mpfr_clear(value_);
        value_[0] = other.value_[0];
        live_ = std::exchange(other.live_, false);
    }
    return *this;
}

Mpfr::~Mpfr()
{
    if (live_)
        mpfr_clear(value_);
}

// --- Interval ---------------------------------------------------------------

Interval::Interval(mpfr_prec_t precision) : precision_(precision), lower_(precision), upper_(precision) {}

Interval Interval::of(long value, mpfr_prec_t precision)
{
    Interval out(precision);
    mpfr_set_si(out.lower_.get(), value, MPFR_RNDD);
    mpfr_set_si(out.upper_.get(), value, MPFR_RNDU);
    return out;
}

Interval Interval::of(const Int& value, mpfr_prec_t precision)
{
    Interval out(precision);
    mpfr_set_z(out.lower_.get(), value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.upper_.get(), value.get_mpz_t(), MPFR_RNDU);
    return out;
}

Interval Interval::of(const Rational& value, mpfr_prec_t precision)
{
    Interval out(precision);
    mpfr_set_q(out.lower_.get(), value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.upper_.get(), value.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::log(const Natural& x, mpfr_prec_t precision)
{
    if (sgn(x) <= 0)
        throw Error(ErrorCode::InvalidArgument, "log of a non-positive integer");
    return of(x, precision).log();
}

Interval Interval::log() const
{
    if (mpfr_sgn(lower_.get()) <= 0)
        throw Error(ErrorCode::InvalidArgument, "log of an interval reaching zero");
    Interval out(precision_);
    mpfr_log(out.lower_.get(), lower_.get(), MPFR_RNDD);
    mpfr_log(out.upper_.get(), upper_.get(), MPFR_RNDU);
    return out;
}

Interval Interval::sqrt(const Natural& x, mpfr_prec_t precision)
{
    if (sgn(x) < 0)
        throw Error(ErrorCode::InvalidArgument, "sqrt of a negative integer");
    Interval arg = of(x, precision);
    Interval out(precision);
    mpfr_sqrt(out.lower_.get(), arg.lower_.get(), MPFR_RNDD);
    mpfr_sqrt(out.upper_.get(), arg.upper_.get(), MPFR_RNDU);
    return out;
}

Interval Interval::from_bounds(Mpfr lower, Mpfr upper)
{
    const mpfr_prec_t prec = std::max(mpfr_get_prec(lower.get()), mpfr_get_prec(upper.get()));
    Interval out(prec);
    out.lower_ = std::move(lower);
    out.upper_ = std::move(upper);
    return out;
}

Interval Interval::log_phi(mpfr_prec_t precision)
{
    // phi = (1 + sqrt 5) / 2
    Interval phi = (of(1L, precision) + sqrt(Natural(5), precision)) / of(2L, precision);
    return phi.log();
}

namespace {

mpfr_prec_t joint_precision(const Interval& a, const Interval& b)
{
    return std::max(a.precision(), b.precision());
}

template <typename Op>
Interval combine_corners(const Interval& a, const Interval& b, Op op)
{
    const mpfr_prec_t prec = joint_precision(a, b);
    const std::array<mpfr_srcptr, 2> xs{a.lower_bound().get(), a.upper_bound().get()};
    const std::array<mpfr_srcptr, 2> ys{b.lower_bound().get(), b.upper_bound().get()};
    Mpfr lo(prec), hi(prec), tmp(prec);
    bool first = true;
    for (mpfr_srcptr x : xs) {
        for (mpfr_srcptr y : ys) {
            op(tmp.get(), x, y, MPFR_RNDD);
            if (first || mpfr_less_p(tmp.get(), lo.get()))
                mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
            op(tmp.get(), x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(tmp.get(), hi.get()))
                mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
            first = false;
        }
    }
    return Interval::from_bounds(std::move(lo), std::move(hi));
}

} // namespace

Interval operator+(const Interval& a, const Interval& b)
{
    Interval out(joint_precision(a, b));
    mpfr_add(out.lower_.get(), a.lower_.get(), b.lower_.get(), MPFR_RNDD);
    mpfr_add(out.upper_.get(), a.upper_.get(), b.upper_.get(), MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b)
{
    Interval out(joint_precision(a, b));
    mpfr_sub(out.lower_.get(), a.lower_.get(), b.upper_.get(), MPFR_RNDD);
    mpfr_sub(out.upper_.get(), a.upper_.get(), b.lower_.get(), MPFR_RNDU);
    return out;
}

Interval operator*(const Interval& a, const Interval& b)
{
    return combine_corners(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
        mpfr_mul(r, x, y, rnd);
    });
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (!b.sign().has_value() || *b.sign() == 0)
        throw Error(ErrorCode::InvalidArgument, "interval division by an enclosure of zero");
    return combine_corners(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
        mpfr_div(r, x, y, rnd);
    });
}

std::optional<int> Interval::sign() const
{
    if (mpfr_sgn(lower_.get()) > 0)
        return 1;
    if (mpfr_sgn(upper_.get()) < 0)
        return -1;
    if (mpfr_zero_p(lower_.get()) && mpfr_zero_p(upper_.get()))
        return 0;
    return std::nullopt;
}

int certified_sign(const IntervalExpr& expr, mpfr_prec_t start_precision, mpfr_prec_t max_precision)
{
    for (mpfr_prec_t prec = start_precision; prec <= max_precision; prec *= 2) {
        if (auto s = expr(prec).sign())
            return *s;
    }
    throw Error(ErrorCode::Undecidable, "comparison undecided at maximum working precision");
}

namespace {

enum class Rounding { Floor, Ceil };

Int certified_round(const IntervalExpr& expr, mpfr_prec_t start, mpfr_prec_t max, Rounding mode)
{
    const mpfr_rnd_t rnd = mode == Rounding::Floor ? MPFR_RNDD : MPFR_RNDU;
    for (mpfr_prec_t prec = start; prec <= max; prec *= 2) {
        Interval iv = expr(prec);
        Int lo, hi;
        mpfr_get_z(lo.get_mpz_t(), iv.lower_bound().get(), rnd);
        mpfr_get_z(hi.get_mpz_t(), iv.upper_bound().get(), rnd);
        if (lo == hi)
            return lo;
    }
    throw Error(ErrorCode::Undecidable, "rounding undecided at maximum working precision");
}

} // namespace

Int certified_floor(const IntervalExpr& expr, mpfr_prec_t start_precision, mpfr_prec_t max_precision)
{
    return certified_round(expr, start_precision, max_precision, Rounding::Floor);
}

Int certified_ceil(const IntervalExpr& expr, mpfr_prec_t start_precision, mpfr_prec_t max_precision)
{
    return certified_round(expr, start_precision, max_precision, Rounding::Ceil);
}

double midpoint(const IntervalExpr& expr, mpfr_prec_t precision)
{
    Interval iv = expr(precision);
    return 0.5 * (iv.lower() + iv.upper());
}

} // namespace zeck

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace zeck {

/// Unbounded integers. `Natural` is used where the value is non-negative by
/// contract; both are exact GMP integers.
using Int = mpz_class;
using Natural = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
    InvalidArgument,
    OutOfRange,
    Interfering,
    BelowThreshold,
    Defect,
    UnknownClaim,
    Undecidable,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parses a non-negative decimal integer; rejects signs, blanks and other bases.
Natural parse_natural(const std::string& text);
/// Non-negative rational written "p", "p/q" or as a decimal "0.25".
Rational parse_rational(const std::string& text);
std::string to_decimal(const Int& value);

/// Exact comparisons between GMP values and builtin integers.
bool fits_u64(const Natural& x);
std::uint64_t to_u64(const Natural& x);
Natural from_u64(std::uint64_t v);

/// RAII wrapper for a single mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t precision);
    Mpfr(const Mpfr& other);
    Mpfr(Mpfr&& other) noexcept;
    Mpfr& operator=(const Mpfr& other);
    Mpfr& operator=(Mpfr&& other) noexcept;
    ~Mpfr();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

private:
    mpfr_t value_;
    bool live_ = false;
};

/// Closed real interval [lower, upper] whose endpoints are always rounded
/// outward, so the true value of any expression built from these operations
/// lies inside.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision);

    static Interval of(long value, mpfr_prec_t precision);
    static Interval of(const Int& value, mpfr_prec_t precision);
    static Interval of(const Rational& value, mpfr_prec_t precision);
    /// Natural logarithm of x >= 1.
    static Interval log(const Natural& x, mpfr_prec_t precision);
    static Interval log_phi(mpfr_prec_t precision);
    static Interval sqrt(const Natural& x, mpfr_prec_t precision);
    /// Takes ownership of already outward-rounded endpoints.
    static Interval from_bounds(Mpfr lower, Mpfr upper);

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Divisor must not contain zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    /// Log of an interval with positive lower bound.
    Interval log() const;

    /// +1 / -1 if the interval lies strictly on one side of zero, 0 if it is
    /// exactly {0}, nullopt if it straddles zero.
    std::optional<int> sign() const;

    mpfr_prec_t precision() const noexcept { return precision_; }
    double lower() const { return lower_.to_double(MPFR_RNDD); }
    double upper() const { return upper_.to_double(MPFR_RNDU); }
    const Mpfr& lower_bound() const noexcept { return lower_; }
    const Mpfr& upper_bound() const noexcept { return upper_; }

private:
    mpfr_prec_t precision_;
    Mpfr lower_;
    Mpfr upper_;
};

using IntervalExpr = std::function<Interval(mpfr_prec_t)>;

/// Sign of a real expression, re-evaluated at doubling precision until the
/// enclosure excludes zero. Throws ErrorCode::Undecidable past max_precision.
int certified_sign(const IntervalExpr& expr, mpfr_prec_t start_precision = 64,
                   mpfr_prec_t max_precision = 1 << 15);

/// Floor / ceiling of a real expression that is known not to be an integer.
Int certified_floor(const IntervalExpr& expr, mpfr_prec_t start_precision = 64,
                    mpfr_prec_t max_precision = 1 << 15);
Int certified_ceil(const IntervalExpr& expr, mpfr_prec_t start_precision = 64,
                   mpfr_prec_t max_precision = 1 << 15);

/// Interval enclosure of a double-valued estimate, for display only.
double midpoint(const IntervalExpr& expr, mpfr_prec_t precision = 200);

} // namespace zeck

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace latsec {

struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed real interval [lo, hi] with MPFR endpoints, lo rounded toward
// -inf and hi toward +inf in every operation.  The result of an operation
// always encloses the exact image of the operand intervals.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = default_prec);
    Interval(double x, mpfr_prec_t prec);
    Interval(double lo, double hi, mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static constexpr mpfr_prec_t default_prec = 192;

    static Interval exact(long v, mpfr_prec_t prec = default_prec);
    static Interval of_rational(const mpq_class& q, mpfr_prec_t prec = default_prec);
    static Interval pi(mpfr_prec_t prec = default_prec);
    // Hull of two doubles, no rounding slack beyond the double values themselves.
    static Interval hull(double lo, double hi, mpfr_prec_t prec = default_prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
    double lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid() const;
    double width() const;
    bool contains_zero() const;
    bool contains(const mpq_class& x) const;
    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool intersects(const Interval& o) const;

    // True iff every point of *this is strictly below every point of o.
    bool strictly_below(const Interval& o) const;
    bool strictly_below(const mpq_class& x) const;
    bool strictly_above(const mpq_class& x) const;

    Interval operator-() const;
    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    Interval exp() const;
    Interval log() const;
    Interval sqrt() const;
    Interval pown(long e) const;   // integer power, e may be negative
    Interval inv() const;

    // Extends the upper endpoint by t >= 0 (used to attach analytic tail bounds).
    Interval widen_hi(const Interval& t) const;

    std::string str(int digits = 20) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

Interval operator*(long a, const Interval& b);
Interval operator+(long a, const Interval& b);
Interval operator-(long a, const Interval& b);

}  // namespace latsec

#pragma once

#include "latsec/interval.hpp"

namespace latsec {
namespace special {

struct EvalOptions {
    mpfr_prec_t prec = Interval::default_prec;
    long max_terms = 4000;
    // Target enclosure width; 0 means best effort at the given precision.
    double target_width = 0.0;
};

// Jacobi theta_3(y) = 1 + 2 sum_{n>=1} exp(-pi n^2 y), y > 0.
// Arguments below 1/2 are routed through the modularity relation
// theta_3(1/y) = sqrt(y) theta_3(y).
Interval theta3(const Interval& y, const EvalOptions& opt = {});
Interval theta3(double y, const EvalOptions& opt = {});

// nu-th derivative of theta_3 (true sign, not the (-1)^nu-flipped series).
Interval theta3_deriv(int nu, const Interval& y, const EvalOptions& opt = {});

// Dedekind eta(y) = exp(-pi y/12) prod_{n>=1} (1 - exp(-2 pi n y)).
Interval eta(const Interval& y, const EvalOptions& opt = {});
Interval eta(double y, const EvalOptions& opt = {});

// Derivatives d^j/dy^j of log theta_3(y), j = 0..4.
Interval log_theta3_deriv(int j, const Interval& y, const EvalOptions& opt = {});

// Derivatives d^j/dy^j of log eta(y), j = 1..4, via the double exponential sum.
Interval log_eta_deriv(int j, const Interval& y, const EvalOptions& opt = {});

// Derivative of order 2..4 of f(x) = log theta_3(exp(x)).
Interval log_theta_log_deriv(int order, const Interval& x, const EvalOptions& opt = {});

// Derivative of order 2..4 of f(x) = log eta(exp(x)).
Interval log_eta_log_deriv(int order, const Interval& x, const EvalOptions& opt = {});

// Three-term lower/upper envelope series for (-1)^nu theta_3^(nu)(y) on
// y >= 1: the coefficient tables of the sandwich
// 0 < lower_nu(y) < (-1)^nu theta_3^(nu)(y) < upper_nu(y).
struct ThetaBounds {
    static Interval lower(int nu, const Interval& y, mpfr_prec_t prec = Interval::default_prec);
    static Interval upper(int nu, const Interval& y, mpfr_prec_t prec = Interval::default_prec);
};

}  // namespace special
}  // namespace latsec

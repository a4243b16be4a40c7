#include "latsec/special.hpp"

#include <cmath>

namespace latsec {
namespace special {

namespace {

double stop_eps(const EvalOptions& opt) {
    if (opt.target_width > 0) return opt.target_width / 4;
    return std::ldexp(1.0, -static_cast<int>(opt.prec) + 8);
}

// [0, b.hi] for a nonnegative bound b.
Interval tail01(const Interval& b) {
    return Interval(0.0, b.prec()).widen_hi(b);
}

void require_positive(const Interval& y, const char* who) {
    if (!y.is_positive()) throw std::domain_error(std::string(who) + ": argument must be > 0");
}

Interval theta3_direct(const Interval& y, const EvalOptions& opt) {
    const Interval pi = Interval::pi(opt.prec);
    const Interval py = pi * y;
    Interval s = Interval::exact(1, opt.prec);
    const double eps = stop_eps(opt);
    for (long n = 1;; ++n) {
        if (n > opt.max_terms) throw PrecisionUnreachable("theta3: cutoff cap exceeded");
        Interval term = 2 * (-(py * Interval::exact(n * n, opt.prec))).exp();
        s += term;
        // Geometric tail: 2 e^{-pi n^2 y} / (1 - e^{-pi (2n+1) y}).
        Interval ratio = (-(py * Interval::exact(2 * n + 1, opt.prec))).exp();
        if (ratio.hi() < 1.0) {
            Interval tail = 2 * (-(py * Interval::exact((n + 1) * (n + 1), opt.prec))).exp() /
                            (1 - ratio);
            if (tail.hi() < eps) return s.widen_hi(tail);
        }
    }
}

}  // namespace

Interval theta3(const Interval& y, const EvalOptions& opt) {
    require_positive(y, "theta3");
    if (y.lo() >= 0.25) return theta3_direct(y, opt);
    // theta_3(y) = sqrt(1/y) theta_3(1/y)
    Interval z = y.inv();
    return z.sqrt() * theta3_direct(z, opt);
}

Interval theta3(double y, const EvalOptions& opt) {
    return theta3(Interval(y, opt.prec), opt);
}

Interval theta3_deriv(int nu, const Interval& y, const EvalOptions& opt) {
    if (nu < 0 || nu > 4) throw std::invalid_argument("theta3_deriv: nu must be in 0..4");
    if (nu == 0) return theta3(y, opt);
    require_positive(y, "theta3_deriv");
    const Interval pi = Interval::pi(opt.prec);
    const Interval py = pi * y;
    const Interval pnu = pi.pown(nu);
    Interval s(opt.prec);
    const double eps = stop_eps(opt);
    for (long n = 1;; ++n) {
        if (n > opt.max_terms) throw PrecisionUnreachable("theta3_deriv: cutoff cap exceeded");
        Interval nsq = Interval::exact(n * n, opt.prec);
        s += 2 * pnu * nsq.pown(nu) * (-(py * nsq)).exp();
        // Ratio bound: term(n+1)/term(n) <= ((n+1)/n)^{2nu} e^{-pi(2n+1)y}.
        Interval ratio = (Interval::exact(n + 1, opt.prec) / Interval::exact(n, opt.prec))
                             .pown(2 * nu) *
                         (-(py * Interval::exact(2 * n + 1, opt.prec))).exp();
        if (ratio.hi() < 1.0) {
            Interval m1 = Interval::exact((n + 1) * (n + 1), opt.prec);
            Interval next = 2 * pnu * m1.pown(nu) * (-(py * m1)).exp();
            Interval tail = next / (1 - ratio);
            if (tail.hi() < eps) {
                s = s.widen_hi(tail);
                return (nu % 2 == 0) ? s : -s;
            }
        }
    }
}

namespace {

Interval eta_direct(const Interval& y, const EvalOptions& opt) {
    const Interval pi = Interval::pi(opt.prec);
    const Interval twopy = 2 * (pi * y);
    Interval prefactor = (-(pi * y) / Interval::exact(12, opt.prec)).exp();
    Interval prod = Interval::exact(1, opt.prec);
    const double eps = stop_eps(opt);
    Interval x = (-twopy).exp();
    for (long n = 1;; ++n) {
        if (n > opt.max_terms) throw PrecisionUnreachable("eta: cutoff cap exceeded");
        prod *= 1 - (-(twopy * Interval::exact(n, opt.prec))).exp();
        // 1 >= prod_{m>n} (1-x^m) >= 1 - x^{n+1}/(1-x)
        Interval bound = (-(twopy * Interval::exact(n + 1, opt.prec))).exp() / (1 - x);
        if (bound.hi() < eps) {
            return prefactor * prod * (1 - tail01(bound));
        }
    }
}

}  // namespace

Interval eta(const Interval& y, const EvalOptions& opt) {
    require_positive(y, "eta");
    if (y.lo() >= 0.25) return eta_direct(y, opt);
    // eta(y) = sqrt(1/y) eta(1/y)
    Interval z = y.inv();
    return z.sqrt() * eta_direct(z, opt);
}

Interval eta(double y, const EvalOptions& opt) {
    return eta(Interval(y, opt.prec), opt);
}

Interval log_theta3_deriv(int j, const Interval& y, const EvalOptions& opt) {
    if (j < 0 || j > 4) throw std::invalid_argument("log_theta3_deriv: order must be in 0..4");
    if (j == 0) return theta3(y, opt).log();
    Interval t0 = theta3(y, opt);
    Interval t1 = theta3_deriv(1, y, opt);
    if (j == 1) return t1 / t0;
    Interval r1 = t1 / t0;
    Interval t2 = theta3_deriv(2, y, opt);
    if (j == 2) return t2 / t0 - r1 * r1;
    Interval t3 = theta3_deriv(3, y, opt);
    if (j == 3) return t3 / t0 - 3 * (t2 * t1) / (t0 * t0) + 2 * r1.pown(3);
    Interval t4 = theta3_deriv(4, y, opt);
    return t4 / t0 - 4 * (t3 * t1) / (t0 * t0) - 3 * (t2 / t0).pown(2) +
           12 * (t2 * t1 * t1) / t0.pown(3) - 6 * r1.pown(4);
}

Interval log_eta_deriv(int j, const Interval& y, const EvalOptions& opt) {
    if (j < 1 || j > 4) throw std::invalid_argument("log_eta_deriv: order must be in 1..4");
    require_positive(y, "log_eta_deriv");
    const Interval pi = Interval::pi(opt.prec);
    const Interval twopy = 2 * (pi * y);
    // d^j/dy^j log eta(y) = -pi/12 [j=1]
    //   + (-1)^{j+1} (2 pi)^j sum_{s>=1} c_j(s) e^{-2 pi s y},
    // c_j(s) = sum_{m | s} m^{j-1} (s/m)^j.
    Interval s(opt.prec);
    const double eps = stop_eps(opt);
    const Interval tp = (2 * pi).pown(j);
    for (long t = 1;; ++t) {
        if (t > opt.max_terms) throw PrecisionUnreachable("log_eta_deriv: cutoff cap exceeded");
        long c = 0;
        for (long m = 1; m <= t; ++m) {
            if (t % m) continue;
            long q = t / m;
            long term = 1;
            for (int i = 0; i < j - 1; ++i) term *= m;
            for (int i = 0; i < j; ++i) term *= q;
            c += term;
        }
        s += Interval::exact(c, opt.prec) * (-(twopy * Interval::exact(t, opt.prec))).exp();
        // c_j(s) <= s^{j+1}; ratio bound for the dominated tail.
        Interval ratio = (Interval::exact(t + 2, opt.prec) / Interval::exact(t + 1, opt.prec))
                             .pown(j + 1) *
                         (-twopy).exp();
        if (ratio.hi() < 1.0) {
            Interval next = Interval::exact(t + 1, opt.prec).pown(j + 1) *
                            (-(twopy * Interval::exact(t + 1, opt.prec))).exp();
            Interval tail = next / (1 - ratio);
            if (tail.hi() < eps) {
                s = tp * s.widen_hi(tail);
                Interval r = (j % 2 == 1) ? s : -s;
                if (j == 1) r -= pi / Interval::exact(12, opt.prec);
                return r;
            }
        }
    }
}

namespace {

// f(x) = G(e^x) for smooth G: chain-rule combinations for f'', f''', f''''.
Interval exp_chain(int order, const Interval& y, const Interval& g1, const Interval& g2,
                   const Interval& g3, const Interval& g4) {
    Interval y2 = y * y;
    switch (order) {
        case 2:
            return g2 * y2 + g1 * y;
        case 3:
            return g3 * y2 * y + 3 * (g2 * y2) + g1 * y;
        case 4:
            return g4 * y2 * y2 + 6 * (g3 * y2 * y) + 7 * (g2 * y2) + g1 * y;
        default:
            throw std::invalid_argument("log-derivative order must be in 2..4");
    }
}

}  // namespace

Interval log_theta_log_deriv(int order, const Interval& x, const EvalOptions& opt) {
    Interval y = x.exp();
    Interval g1 = log_theta3_deriv(1, y, opt);
    Interval g2 = log_theta3_deriv(2, y, opt);
    Interval g3 = order >= 3 ? log_theta3_deriv(3, y, opt) : Interval(opt.prec);
    Interval g4 = order >= 4 ? log_theta3_deriv(4, y, opt) : Interval(opt.prec);
    return exp_chain(order, y, g1, g2, g3, g4);
}

Interval log_eta_log_deriv(int order, const Interval& x, const EvalOptions& opt) {
    Interval y = x.exp();
    Interval g1 = log_eta_deriv(1, y, opt);
    Interval g2 = log_eta_deriv(2, y, opt);
    Interval g3 = order >= 3 ? log_eta_deriv(3, y, opt) : Interval(opt.prec);
    Interval g4 = order >= 4 ? log_eta_deriv(4, y, opt) : Interval(opt.prec);
    return exp_chain(order, y, g1, g2, g3, g4);
}

namespace {

// Coefficients of the three-term envelopes at e^{-pi y}, e^{-4 pi y}, e^{-9 pi y}.
constexpr long kLower[5][3] = {
    {2, 2, 2}, {2, 8, 18}, {2, 32, 162}, {2, 128, 1458}, {2, 512, 13122}};
constexpr long kUpper[5][3] = {
    {2, 2, 3}, {2, 8, 19}, {2, 32, 163}, {2, 128, 1459}, {2, 512, 13123}};

Interval theta_envelope(const long (*table)[3], int nu, const Interval& y, mpfr_prec_t prec) {
    if (nu < 0 || nu > 4) throw std::invalid_argument("ThetaBounds: nu must be in 0..4");
    Interval pi = Interval::pi(prec);
    Interval py = pi * y;
    Interval s = nu == 0 ? Interval::exact(1, prec) : Interval(prec);
    const long sq[3] = {1, 4, 9};
    for (int i = 0; i < 3; ++i)
        s += Interval::exact(table[nu][i], prec) * (-(py * Interval::exact(sq[i], prec))).exp();
    return pi.pown(nu) * s;
}

}  // namespace

Interval ThetaBounds::lower(int nu, const Interval& y, mpfr_prec_t prec) {
    return theta_envelope(kLower, nu, y, prec);
}

Interval ThetaBounds::upper(int nu, const Interval& y, mpfr_prec_t prec) {
    return theta_envelope(kUpper, nu, y, prec);
}

}  // namespace special
}  // namespace latsec

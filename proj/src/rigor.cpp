#include "latsec/rigor.hpp"

#include <cmath>
#include <functional>

#include <json.hpp>

namespace latsec {
namespace rigor {

using special::EvalOptions;
using special::ThetaBounds;

double trapezoid(double x, const TrapezoidKernel& kernel) {
    double k = kernel.k, h = kernel.h;
    if (!(h > k && k >= 0)) throw std::invalid_argument("trapezoid: need 0 <= k < h");
    double a = std::fabs(x);
    if (a >= h) return 0.0;
    if (a <= k) return h - k;
    return h - a;
}

namespace {

double f_log_theta(double x, const EvalOptions& opt) {
    return special::theta3(Interval(std::exp(x), opt.prec), opt).log().mid();
}

double f2_log_theta(double x, const EvalOptions& opt) {
    return special::log_theta_log_deriv(2, Interval(x, opt.prec), opt).mid();
}

double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    double s = 0, w = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        double l = a + i * w, r = l + w, m = 0.5 * (l + r);
        s += (w / 6.0) * (f(l) + 4 * f(m) + f(r));
    }
    return s;
}

}  // namespace

double convolution_identity_residual(double k, double h, double x, const QuadratureSpec& quad) {
    if (!(h > k && k >= 0)) throw std::invalid_argument("need 0 <= k < h");
    EvalOptions opt;
    double lhs = f_log_theta(x + h, opt) - f_log_theta(x + k, opt) - f_log_theta(x - k, opt) +
                 f_log_theta(x - h, opt);
    TrapezoidKernel ker{k, h};
    auto integrand = [&](double u) { return f2_log_theta(u, opt) * trapezoid(u - x, ker); };
    // The kernel has kinks at x +- k and x +- h; integrate each smooth piece.
    double integral = simpson(integrand, x - h, x - k, quad.panels) +
                      simpson(integrand, x - k, x + k, quad.panels) +
                      simpson(integrand, x + k, x + h, quad.panels);
    return std::fabs(lhs - integral);
}

void SweepReport::write_jsonl(std::ostream& os) const {
    for (const auto& r : records) {
        nlohmann::json j = {{"target", r.target},
                            {"where", {r.where_lo, r.where_hi}},
                            {"bound", {r.bound_lo, r.bound_hi}},
                            {"certified", r.certified}};
        os << j.dump() << "\n";
    }
}

Interval fourth_derivative_endpoint_bound(const mpq_class& m, const mpq_class& M,
                                          const EvalOptions& opt) {
    const mpfr_prec_t p = opt.prec;
    Interval im = Interval::of_rational(m, p);
    Interval iM = Interval::of_rational(M, p);
    auto L = [&](int nu, const Interval& y) { return ThetaBounds::lower(nu, y, p); };
    auto U = [&](int nu, const Interval& y) { return ThetaBounds::upper(nu, y, p); };
    Interval m2 = im * im, m3 = m2 * im, m4 = m3 * im;
    Interval M2 = iM * iM, M3 = M2 * iM, M4 = M3 * iM;
    Interval L0M = L(0, iM), U0m = U(0, im);
    Interval L1M = L(1, iM), U1m = U(1, im);
    Interval L2M = L(2, iM), U2m = U(2, im);
    Interval L3M = L(3, iM);
    Interval U4m = U(4, im);

    Interval part4 = M4 * U4m / L0M - 4 * (m4 * L3M * L1M) / U0m.pown(2) -
                     3 * (m4 * L2M.pown(2)) / U0m.pown(2) +
                     12 * (M4 * U2m * U1m.pown(2)) / L0M.pown(3) -
                     6 * (m4 * L1M.pown(4)) / U0m.pown(4);
    Interval part3 = 6 * (-(m3 * L3M) / U0m + 3 * (M3 * U2m * U1m) / L0M.pown(2) -
                          2 * (m3 * L1M.pown(3)) / U0m.pown(3));
    Interval part2 = 7 * (M2 * U2m / L0M - (m2 * L1M.pown(2)) / U0m.pown(2));
    Interval part1 = im * L1M / U0m;
    return part4 + part3 + part2 - part1;
}

SweepReport verify_fourth_derivative_sweep(const EvalOptions& opt) {
    SweepReport rep;
    const mpq_class threshold(-16, 100);
    for (long k = 1; k <= 500; ++k) {
        mpq_class m = 1 + mpq_class(k - 1, 1000);
        mpq_class M = 1 + mpq_class(k, 1000);
        Interval b = fourth_derivative_endpoint_bound(m, M, opt);
        CertRecord r;
        r.target = "fourth_derivative_bound";
        r.where_lo = m.get_d();
        r.where_hi = M.get_d();
        r.bound_lo = b.lo();
        r.bound_hi = b.hi();
        r.certified = b.strictly_below(threshold);
        if (!r.certified) ++rep.failures;
        rep.records.push_back(r);
    }
    return rep;
}

SweepReport verify_third_derivative_negativity(const std::vector<double>& y_grid,
                                               const EvalOptions& opt) {
    SweepReport rep;
    const Interval pi = Interval::pi(opt.prec);
    for (double yd : y_grid) {
        if (yd < 1.5) throw std::invalid_argument("third-derivative check needs y >= 3/2");
        Interval y(yd, opt.prec);
        Interval t0 = special::theta3(y, opt);
        Interval t1 = special::theta3_deriv(1, y, opt);
        Interval t2 = special::theta3_deriv(2, y, opt);
        Interval t3 = special::theta3_deriv(3, y, opt);
        Interval t02 = t0 * t0;
        Interval y2 = y * y;
        Interval num = t1 * t02 + 3 * (y * t2 * t02) - 3 * (y * t1 * t1 * t0) +
                       y2 * t3 * t02 - 3 * (y2 * t2 * t1 * t0) + 2 * (y2 * t1.pown(3));
        CertRecord neg;
        neg.target = "third_derivative_numerator_negative";
        neg.where_lo = neg.where_hi = yd;
        neg.bound_lo = num.lo();
        neg.bound_hi = num.hi();
        neg.certified = num.is_negative();
        if (!neg.certified) ++rep.failures;
        rep.records.push_back(neg);

        Interval cap = -20 * (y2 * (-(pi * y)).exp());
        CertRecord strong;
        strong.target = "third_derivative_below_envelope";
        strong.where_lo = strong.where_hi = yd;
        Interval diff = num - cap;
        strong.bound_lo = diff.lo();
        strong.bound_hi = diff.hi();
        strong.certified = diff.is_negative();
        if (!strong.certified) ++rep.failures;
        rep.records.push_back(strong);
    }
    return rep;
}

SweepReport verify_eta_derivative_properties(const std::vector<double>& x_grid,
                                             const EvalOptions& opt) {
    SweepReport rep;
    std::vector<Interval> f3;
    for (double xd : x_grid) {
        Interval x(xd, opt.prec);
        Interval f2 = special::log_eta_log_deriv(2, x, opt);
        CertRecord concave;
        concave.target = "log_eta_exp_second_derivative_negative";
        concave.where_lo = concave.where_hi = xd;
        concave.bound_lo = f2.lo();
        concave.bound_hi = f2.hi();
        concave.certified = f2.is_negative();
        if (!concave.certified) ++rep.failures;
        rep.records.push_back(concave);

        if (xd >= 0) {
            Interval f4 = special::log_eta_log_deriv(4, x, opt);
            CertRecord quart;
            quart.target = "log_eta_exp_fourth_derivative_negative";
            quart.where_lo = quart.where_hi = xd;
            quart.bound_lo = f4.lo();
            quart.bound_hi = f4.hi();
            quart.certified = f4.is_negative();
            if (!quart.certified) ++rep.failures;
            rep.records.push_back(quart);
        }
        f3.push_back(special::log_eta_log_deriv(3, x, opt));
    }
    // Oddness: f'''(x) + f'''(-x) must enclose 0 for mirrored grid points.
    size_t n = x_grid.size();
    for (size_t i = 0; i < n / 2; ++i) {
        Interval s = f3[i] + f3[n - 1 - i];
        CertRecord odd;
        odd.target = "log_eta_exp_third_derivative_odd";
        odd.where_lo = x_grid[i];
        odd.where_hi = x_grid[n - 1 - i];
        odd.bound_lo = s.lo();
        odd.bound_hi = s.hi();
        odd.certified = s.contains_zero();
        if (!odd.certified) ++rep.failures;
        rep.records.push_back(odd);
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        CertRecord dec;
        dec.target = "log_eta_exp_third_derivative_decreasing";
        dec.where_lo = x_grid[i];
        dec.where_hi = x_grid[i + 1];
        Interval diff = f3[i] - f3[i + 1];
        dec.bound_lo = diff.lo();
        dec.bound_hi = diff.hi();
        dec.certified = diff.is_positive();
        if (!dec.certified) ++rep.failures;
        rep.records.push_back(dec);
    }
    return rep;
}

}  // namespace rigor
}  // namespace latsec

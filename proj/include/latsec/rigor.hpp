#pragma once

#include "latsec/interval.hpp"
#include "latsec/special.hpp"

#include <ostream>
#include <vector>

namespace latsec {
namespace rigor {

// Piecewise-linear even kernel supported on [-h, h] with plateau h - k.
struct TrapezoidKernel {
    double k = 0;
    double h = 1;
};

double trapezoid(double x, const TrapezoidKernel& kernel);

struct QuadratureSpec {
    int panels = 64;  // Simpson subpanels per smooth piece
};

// | f(x+h) - f(x+k) - f(x-k) + f(x-h) - int f''(u) T(u-x;k,h) du |
// for f(x) = log theta_3(exp(x)).
double convolution_identity_residual(double k, double h, double x,
                                     const QuadratureSpec& quad = {});

struct CertRecord {
    std::string target;
    double where_lo = 0, where_hi = 0;
    double bound_lo = 0, bound_hi = 0;
    bool certified = false;
};

struct SweepReport {
    std::vector<CertRecord> records;
    int failures = 0;
    void write_jsonl(std::ostream& os) const;
};

// Endpoint upper bound for h(y) on [m, M] built from the envelope series.
Interval fourth_derivative_endpoint_bound(const mpq_class& m, const mpq_class& M,
                                          const special::EvalOptions& opt = {});

// 500 subintervals of [1, 3/2]: certifies the endpoint upper bound for
// h(y) = y^4 g'''' + 6 y^3 g''' + 7 y^2 g'' + y g' (g = log theta_3)
// to be < -0.16 on each, via the three-term envelope series.
SweepReport verify_fourth_derivative_sweep(const special::EvalOptions& opt = {});

// Certifies the third-derivative numerator combination to be < 0 and
// < -20 y^2 e^{-pi y} at each grid point y >= 3/2.
SweepReport verify_third_derivative_negativity(const std::vector<double>& y_grid,
                                               const special::EvalOptions& opt = {});

// For f(x) = log eta(e^x): f'' < 0 everywhere on the grid, f'''' < 0 for
// x >= 0, f'''(x) + f'''(-x) encloses 0, and f''' strictly decreasing
// across consecutive grid points.
SweepReport verify_eta_derivative_properties(const std::vector<double>& x_grid,
                                             const special::EvalOptions& opt = {});

}  // namespace rigor
}  // namespace latsec

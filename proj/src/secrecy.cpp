#include "latsec/secrecy.hpp"

#include <cmath>

namespace latsec {
namespace secrecy {

namespace {

bool is_perfect_square(long n) {
    long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n || (r + 1) * (r + 1) == n || (r > 0 && (r - 1) * (r - 1) == n);
}

// Rational lambda with G - lambda I positive semidefinite, certified by
// exact LDL pivots.  Used for the Gram theta tail bound.
mpq_class certified_min_eigenvalue(const std::vector<std::vector<long>>& G) {
    size_t n = G.size();
    auto psd_check = [&](const mpq_class& lam) {
        std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) q[i][j] = G[i][j] - (i == j ? lam : mpq_class(0));
        for (size_t i = 0; i < n; ++i) {
            if (q[i][i] < 0) return false;
            if (q[i][i] == 0) {
                for (size_t j = i + 1; j < n; ++j)
                    if (q[i][j] != 0) return false;
                continue;
            }
            for (size_t k = i + 1; k < n; ++k)
                for (size_t l = k; l < n; ++l) {
                    q[k][l] -= q[i][k] * q[i][l] / q[i][i];
                    q[l][k] = q[k][l];
                }
        }
        return true;
    };
    if (!psd_check(0)) throw NotPositiveDefinite("Gram matrix not positive semidefinite");
    mpq_class lam = G[0][0];
    for (size_t i = 0; i < n; ++i) lam = std::min(lam, mpq_class(G[i][i]));
    for (int it = 0; it < 60; ++it) {
        if (lam > 0 && psd_check(lam)) return lam;
        lam /= 2;
    }
    throw NotPositiveDefinite("Gram matrix not positive definite");
}

}  // namespace

Interval theta_value(const LatticeSpec& L, const Interval& y, const special::EvalOptions& opt) {
    if (L.kind() == LatticeSpec::Kind::Diagonal) {
        Interval r = Interval::exact(1, opt.prec);
        for (long a : L.scales()) r *= special::theta3(Interval::exact(a, opt.prec) * y, opt);
        return r;
    }
    // Gram: truncated q-series plus a tail driven by a certified lower bound
    // lambda on the quadratic form, so that r_m <= (2 sqrt(m/lambda) + 1)^n.
    const long T = 40;
    QExpansion series = theta_series(L, T);
    Interval pi = Interval::pi(opt.prec);
    Interval E = (-(pi * y)).exp();
    Interval s(opt.prec);
    for (const auto& [e, c] : series.terms()) {
        long m = e / QExpansion::grid;
        Interval coeff = Interval::of_rational(mpq_class(c), opt.prec);
        s += coeff * E.pown(m);
    }
    mpq_class lambda = certified_min_eigenvalue(L.matrix());
    long n = L.dim();
    Interval lam = Interval::of_rational(lambda, opt.prec);
    // term(m) = (2 sqrt(m/lambda) + 1)^n e^{-pi m y}; ratio bound for m >= T.
    Interval ratio = (Interval::exact(T + 1, opt.prec) / Interval::exact(T, opt.prec))
                         .sqrt()
                         .pown(n) *
                     E;
    if (!(ratio.hi() < 1.0))
        throw PrecisionUnreachable("theta_value: Gram tail bound diverges at this y");
    Interval first =
        (1 + 2 * (Interval::exact(T, opt.prec) / lam).sqrt()).pown(n) * E.pown(T);
    Interval tail = first / (1 - ratio);
    return s.widen_hi(tail);
}

Interval xi(const LatticeSpec& L, long ell, const Interval& y, const special::EvalOptions& opt) {
    long n = L.dim();
    Interval sq = Interval::exact(ell, opt.prec).sqrt();
    Interval numerator = special::theta3(y * sq, opt).pown(n);
    return numerator / theta_value(L, y, opt);
}

Interval xi_modified(const LatticeSpec& L, long ell, const Interval& y,
                     const special::EvalOptions& opt) {
    long n = L.dim();
    if (n % 2 != 0 && !is_perfect_square(ell))
        throw OddDimensionNonSquareLevel(
            "xi_modified: odd dimension requires a perfect-square level");
    Interval base = special::theta3(y, opt) *
                    special::theta3(Interval::exact(ell, opt.prec) * y, opt);
    Interval numerator = base.pown(n / 2);
    if (n % 2 != 0) numerator *= base.sqrt();
    return numerator / theta_value(L, y, opt);
}

HSCase classify_hs(double a, double b) {
    if (a <= 0 || b <= 0) throw std::domain_error("classify_hs: a, b must be positive");
    if (a == 1.0 || b == 1.0) return HSCase::ConstantCase;
    return ((a - 1) * (b - 1) > 0) ? HSCase::MaxAtSymmetry : HSCase::MinAtSymmetry;
}

bool ScanReport::extremum_bracket_contains(double y) const {
    if (extremum_lo < 0 || extremum_hi < 0) return false;
    return grid[extremum_lo] <= y && y <= grid[extremum_hi];
}

void ScanReport::write_csv(std::ostream& os) const {
    os << "y,lo,hi\n";
    for (size_t i = 0; i < grid.size(); ++i)
        os << grid[i] << "," << values[i].lo() << "," << values[i].hi() << "\n";
}

ScanReport unimodality_scan(const std::function<Interval(const Interval&)>& fn,
                            double symmetry_point, const GridSpec& grid, bool expect_max) {
    if (grid.points < 3 || grid.points % 2 == 0)
        throw std::invalid_argument("unimodality_scan: need an odd grid of >= 3 points");
    ScanReport rep;
    int half = grid.points / 2;
    double rho = std::pow(grid.span, 1.0 / half);
    for (int i = -half; i <= half; ++i)
        rep.grid.push_back(symmetry_point * std::pow(rho, i));
    for (double y : rep.grid) rep.values.push_back(fn(Interval(y, Interval::default_prec)));

    int last_rise = -1, first_fall = -1;
    for (size_t i = 0; i + 1 < rep.values.size(); ++i) {
        ScanCell cell;
        cell.y_left = rep.grid[i];
        cell.y_right = rep.grid[i + 1];
        if (rep.values[i].strictly_below(rep.values[i + 1]))
            cell.direction = CellDirection::Up;
        else if (rep.values[i + 1].strictly_below(rep.values[i]))
            cell.direction = CellDirection::Down;
        else {
            cell.direction = CellDirection::Inconclusive;
            ++rep.inconclusive_cells;
        }
        rep.cells.push_back(cell);
    }
    // For an expected minimum, flip directions and reuse the maximum logic.
    auto dir = [&](const ScanCell& c) {
        if (c.direction == CellDirection::Inconclusive) return CellDirection::Inconclusive;
        if (expect_max) return c.direction;
        return c.direction == CellDirection::Up ? CellDirection::Down : CellDirection::Up;
    };
    for (size_t i = 0; i < rep.cells.size(); ++i) {
        if (dir(rep.cells[i]) == CellDirection::Up) last_rise = static_cast<int>(i);
        if (dir(rep.cells[i]) == CellDirection::Down && first_fall < 0)
            first_fall = static_cast<int>(i);
    }
    // Certified rise after a certified fall contradicts the up-then-down shape.
    if (first_fall >= 0 && last_rise > first_fall) rep.shape_consistent = false;
    rep.extremum_lo = last_rise >= 0 ? last_rise : 0;
    rep.extremum_hi = first_fall >= 0 ? first_fall + 1 : static_cast<int>(rep.grid.size()) - 1;

    // Certified symmetry check: f(y) must meet f over an enclosure of s^2/y,
    // since the grid doubles themselves are not exactly reciprocal-symmetric.
    // The symmetry point itself is only known to double accuracy (e.g.
    // 1/sqrt(12)), so widen it slightly to cover the exact value.
    Interval s(symmetry_point * (1 - 4e-16), symmetry_point * (1 + 4e-16),
               Interval::default_prec);
    for (size_t i = rep.values.size() / 2 + 1; i < rep.values.size(); ++i) {
        Interval mirror = s * s / Interval(rep.grid[i], Interval::default_prec);
        if (!rep.values[i].intersects(fn(mirror))) rep.symmetry_ok = false;
    }
    return rep;
}

}  // namespace secrecy
}  // namespace latsec

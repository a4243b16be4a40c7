#pragma once

#include "latsec/interval.hpp"
#include "latsec/lattice.hpp"
#include "latsec/special.hpp"

#include <functional>
#include <ostream>
#include <vector>

namespace latsec {
namespace secrecy {

struct OddDimensionNonSquareLevel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rigorous enclosure of Theta_Lambda(y).  Diagonal specs go through theta_3
// products; Gram specs use the truncated q-series with a certified tail bound.
Interval theta_value(const LatticeSpec& L, const Interval& y,
                     const special::EvalOptions& opt = {});

// Secrecy function Xi(y) = theta_3^n(y sqrt(ell)) / Theta_L(y).
Interval xi(const LatticeSpec& L, long ell, const Interval& y,
            const special::EvalOptions& opt = {});

// Modified secrecy function Xi~(y) = Theta_{D^ell}^{n/2}(y) / Theta_L(y).
// Odd dimension is accepted only for perfect-square ell (the half power of
// the positive value theta_3(y) theta_3(ell y) is then taken via sqrt).
Interval xi_modified(const LatticeSpec& L, long ell, const Interval& y,
                     const special::EvalOptions& opt = {});

enum class HSCase { ConstantCase, MaxAtSymmetry, MinAtSymmetry };

// Case analysis for theta_3(y) theta_3(aby) / (theta_3(ay) theta_3(by)):
// behaviour at the symmetry point 1/sqrt(ab) depends only on the signs of
// a-1 and b-1.
HSCase classify_hs(double a, double b);

struct GridSpec {
    int points = 41;      // odd, so the symmetry point is a grid point
    double span = 10.0;   // grid covers [s/span, s*span] multiplicatively
};

enum class CellDirection { Up, Down, Inconclusive };

struct ScanCell {
    double y_left = 0, y_right = 0;
    CellDirection direction = CellDirection::Inconclusive;
};

struct ScanReport {
    std::vector<double> grid;
    std::vector<Interval> values;
    std::vector<ScanCell> cells;
    // Bracket of grid indices that must contain the extremum: ]last certified
    // rise, first certified fall[ for a maximum (mirrored for a minimum).
    int extremum_lo = -1, extremum_hi = -1;
    bool shape_consistent = true;    // no certified cell contradicts unimodality
    bool symmetry_ok = true;         // mirrored enclosures intersect
    int inconclusive_cells = 0;

    bool extremum_bracket_contains(double y) const;
    void write_csv(std::ostream& os) const;
};

// Certified monotonicity scan of fn on a multiplicatively symmetric grid
// around symmetry_point.  expect_max selects the up-then-down shape; pass
// false for an expected minimum (down-then-up).
ScanReport unimodality_scan(const std::function<Interval(const Interval&)>& fn,
                            double symmetry_point, const GridSpec& grid, bool expect_max);

}  // namespace secrecy
}  // namespace latsec

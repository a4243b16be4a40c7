#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latsec/rigor.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace latsec;
using namespace latsec::rigor;

TEST_CASE("trapezoid kernel") {
    TrapezoidKernel k{1, 2};
    CHECK(trapezoid(0, k) == doctest::Approx(1.0));     // plateau height h - k
    CHECK(trapezoid(2, k) == doctest::Approx(0.0));     // support endpoints
    CHECK(trapezoid(-2, k) == doctest::Approx(0.0));
    CHECK(trapezoid(1.5, k) == doctest::Approx(0.5));   // linear ramp h - x
    CHECK(trapezoid(-1.5, k) == doctest::Approx(0.5));
    // k = 0 degenerates to a triangle
    TrapezoidKernel tri{0, 1};
    CHECK(trapezoid(0, tri) == doctest::Approx(1.0));
    CHECK(trapezoid(0.25, tri) == doctest::Approx(0.75));
}

TEST_CASE("convolution identity residual") {
    double r = convolution_identity_residual(std::log(2.0), std::log(5.0), 0.3);
    CHECK(r < 1e-8);

    // evenness of f carries over: x and -x give equal residuals
    double rp = convolution_identity_residual(0.2, 1.0, 0.4);
    double rm = convolution_identity_residual(0.2, 1.0, -0.4);
    CHECK(std::abs(rp - rm) < 1e-9);

    // triangle limit: small h, k = 0
    CHECK(convolution_identity_residual(0.0, 1e-3, 0.0) < 1e-10);
}

TEST_CASE("endpoint bound for the fourth-derivative combination") {
    // first and last of the 500 subintervals of [1, 3/2]
    Interval b1 = fourth_derivative_endpoint_bound(mpq_class(1), mpq_class(1001, 1000));
    CHECK(b1.strictly_below(mpq_class(-16, 100)));
    Interval b500 = fourth_derivative_endpoint_bound(mpq_class(1499, 1000), mpq_class(3, 2));
    CHECK(b500.strictly_below(mpq_class(-16, 100)));

    // the crude endpoint mix is local: one shot over [1, 2] must not certify
    Interval wide = fourth_derivative_endpoint_bound(mpq_class(1), mpq_class(2));
    CHECK_FALSE(wide.strictly_below(mpq_class(-16, 100)));
}

TEST_CASE("fourth derivative sweep") {
    auto rep = verify_fourth_derivative_sweep();
    CHECK(rep.records.size() == 500);
    CHECK(rep.failures == 0);
    for (const auto& r : rep.records) CHECK(r.certified);
    // margins are strictly below the threshold
    for (const auto& r : rep.records) CHECK(r.bound_hi < -0.16);
}

TEST_CASE("third derivative negativity") {
    auto rep = verify_third_derivative_negativity({1.5, 5.0, 10.0});
    CHECK(rep.failures == 0);
    CHECK(rep.records.size() == 6);  // negativity + envelope per point
    // at y = 5 the numerator is below -20 y^2 e^{-pi y} (about -7e-5)
    Interval env =
        -20 * Interval::exact(25) * (-Interval::pi() * Interval::exact(5)).exp();
    CHECK(rep.records[2].bound_hi < env.hi());
    CHECK(rep.records[3].certified);
}

TEST_CASE("eta derivative properties") {
    std::vector<double> grid;
    for (int i = -10; i <= 10; ++i) grid.push_back(i * 0.15);
    auto rep = verify_eta_derivative_properties(grid);
    CHECK(rep.failures == 0);

    // spot checks behind the sweep, f(x) = log eta(e^x)
    special::EvalOptions opt;
    CHECK(special::log_eta_log_deriv(3, Interval(0.0, opt.prec), opt).contains_zero());
    CHECK(special::log_eta_log_deriv(2, Interval(0.5, opt.prec), opt).is_negative());
    Interval f3a = special::log_eta_log_deriv(3, Interval(0.2, opt.prec), opt);
    Interval f3b = special::log_eta_log_deriv(3, Interval(0.4, opt.prec), opt);
    CHECK(f3b.strictly_below(f3a));
}

TEST_CASE("report serialization") {
    auto rep = verify_third_derivative_negativity({2.0});
    std::ostringstream os;
    rep.write_jsonl(os);
    auto line = nlohmann::json::parse(os.str().substr(0, os.str().find('\n')));
    CHECK(line.at("certified") == true);
    CHECK(line.contains("target"));
}

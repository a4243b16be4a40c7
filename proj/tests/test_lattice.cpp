#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latsec/lattice.hpp"

using namespace latsec;

TEST_CASE("standard families") {
    CHECK(d_ell(3).scales() == std::vector<long>{1, 3});
    CHECK(d_ell(2).scales() == std::vector<long>{1, 2});
    CHECK(check_diagonal_modularity(d_ell(7), 7));

    CHECK(c_ell(6).scales() == std::vector<long>{1, 2, 3, 6});
    CHECK(c_ell(3).scales() == d_ell(3).scales());
    CHECK(c_ell(12).scales() == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(15) == std::vector<long>{1, 3, 5, 15});
}

TEST_CASE("modularity scale pairing") {
    // 2Z + sqrt(2)Z + Z, 4-modular
    CHECK(check_diagonal_modularity(LatticeSpec::diagonal({1, 2, 4}), 4));
    CHECK_FALSE(check_diagonal_modularity(LatticeSpec::diagonal({1, 2}), 3));
    for (long ell : {6L, 14L, 15L}) CHECK(check_diagonal_modularity(c_ell(ell), ell));
}

TEST_CASE("theta series") {
    auto g1 = theta_series(LatticeSpec::gram({{1}}), 12);
    CHECK(g1.coeff_q(0) == 1);
    CHECK(g1.coeff_q(1) == 2);
    CHECK(g1.coeff_q(4) == 2);
    CHECK(g1.coeff_q(9) == 2);
    CHECK(g1.coeff_q(2) == 0);

    auto gd = theta_series(LatticeSpec::gram({{1, 0}, {0, 3}}), 10);
    auto dd = theta_series(LatticeSpec::diagonal({1, 3}), 10);
    CHECK(gd == dd);

    // A2 root lattice: kissing number 6, norms 2, 6, 8
    auto a2 = theta_series(LatticeSpec::gram({{2, 1}, {1, 2}}), 10);
    CHECK(a2.coeff_q(0) == 1);
    CHECK(a2.coeff_q(2) == 6);
    CHECK(a2.coeff_q(4) == 0);
    CHECK(a2.coeff_q(6) == 6);
    CHECK(a2.coeff_q(8) == 6);
}

TEST_CASE("gram enumeration matches the product formula") {
    // every diagonal spec of dimension <= 4 with scales <= 6, up to q^30
    const long order = 31;
    std::vector<std::vector<long>> specs;
    for (long a = 1; a <= 6; ++a) {
        specs.push_back({a});
        for (long b = a; b <= 6; ++b) {
            specs.push_back({a, b});
            for (long c = b; c <= 6; ++c) {
                specs.push_back({a, b, c});
                for (long d = c; d <= 6; ++d) specs.push_back({a, b, c, d});
            }
        }
    }
    for (const auto& s : specs) {
        auto diag = LatticeSpec::diagonal(s);
        std::vector<std::vector<long>> G(s.size(), std::vector<long>(s.size(), 0));
        for (size_t i = 0; i < s.size(); ++i) G[i][i] = s[i];
        CAPTURE(s[0]);
        CHECK(theta_series(diag, order) == theta_series(LatticeSpec::gram(G), order));
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(theta_series(LatticeSpec::gram({{0, 1}, {1, 0}}), 5), NotPositiveDefinite);
    CHECK_THROWS_AS(theta_series(LatticeSpec::gram({{-1}}), 5), NotPositiveDefinite);
    // odd dimension with a claimed non-square level
    CHECK_THROWS_AS(LatticeSpec::diagonal({1, 2, 3}, 3L), std::invalid_argument);
    LatticeSpec ok = LatticeSpec::diagonal({1, 2, 4}, 4L);  // ell=4 is a square
    CHECK(ok.dim() == 3);
    CHECK_THROWS_AS(LatticeSpec::diagonal({1, 2}).matrix(), WrongSpecKind);
    CHECK_THROWS_AS(LatticeSpec::gram({{1}}).scales(), WrongSpecKind);
}

TEST_CASE("json round trip") {
    auto d = LatticeSpec::diagonal({1, 2, 3, 6}, 6L);
    auto d2 = LatticeSpec::from_json(d.to_json());
    CHECK(d2.scales() == d.scales());
    CHECK(d2.ell() == 6L);

    auto g = LatticeSpec::gram({{2, 1}, {1, 2}});
    auto g2 = LatticeSpec::from_json(g.to_json());
    CHECK(g2.matrix() == g.matrix());
    CHECK_FALSE(g2.ell().has_value());
}

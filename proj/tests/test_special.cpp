#include "gupmag/special_functions.hpp"

#include <doctest.h>

#include <cmath>

using namespace gupmag;

TEST_CASE("erfcx agrees with exp(x^2) erfc(x) at small x and is continuous") {
    for (double x : {0.0, 0.4, 1.7, 3.3, 12.0, 24.9}) {
        CHECK(erfcx(x) ==
              doctest::Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-13));
    }
    // Both branches match the asymptotic series around the junction at 25.
    auto series = [](double x) {
        const double x2 = x * x;
        return (1.0 - 0.5 / x2 + 0.75 / (x2 * x2) - 1.875 / (x2 * x2 * x2)) /
               (x * std::sqrt(M_PI));
    };
    CHECK(erfcx(24.9) == doctest::Approx(series(24.9)).epsilon(1e-10));
    CHECK(erfcx(25.1) == doctest::Approx(series(25.1)).epsilon(1e-10));
    // Large-x asymptotics 1/(x sqrt(pi)).
    for (double x : {10.0, 100.0, 1e4}) {
        const double lead = 1.0 / (x * std::sqrt(M_PI));
        CHECK(erfcx(x) == doctest::Approx(lead * (1.0 - 0.5 / (x * x)))
                              .epsilon(1.0 / std::pow(x, 4)));
    }
    CHECK_THROWS_AS(erfcx(-1.0), DomainError);
}

TEST_CASE("D_{-1}(0) = sqrt(pi/2)") {
    CHECK(cylinder_D(1, 0.0) ==
          doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-13));
}

TEST_CASE("D_{-2}(0) consistent with the q = 0 Gaussian moment") {
    // int_0^inf x e^{-p x^2} dx = 1/(2p) = (2p)^{-1} Gamma(2) D_{-2}(0) e^0
    // => D_{-2}(0) = 1.  (Direct: D_{-2}(0) = D_0(0) - 0 = 1.)
    CHECK(cylinder_D(2, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    auto q = gauss_integral_D(2.0, 0.8, 0.0);
    CHECK(q.value == doctest::Approx(1.0 / (2.0 * 0.8)).epsilon(1e-9));
}

TEST_CASE("quadrature identity route matches the erfc route") {
    for (double u : {0.0, 0.7, 2.5, 6.0, 10.0}) {
        CHECK(cylinder_D_scaled_from_quadrature(1, u) ==
              doctest::Approx(cylinder_Dm1_scaled(u)).epsilon(1e-10));
        CHECK(cylinder_D_scaled_from_quadrature(2, u) ==
              doctest::Approx(cylinder_Dm2_scaled(u)).epsilon(1e-9));
    }
}

TEST_CASE("gauss_integral_D against the closed identity at general p, q") {
    const double p = 0.37, q = 1.9;
    const double u = q / std::sqrt(2.0 * p);
    auto got1 = gauss_integral_D(1.0, p, q);
    CHECK(got1.value == doctest::Approx(cylinder_Dm1_scaled(u) / std::sqrt(2.0 * p))
                            .epsilon(1e-11));
    auto got2 = gauss_integral_D(2.0, p, q);
    CHECK(got2.value ==
          doctest::Approx(cylinder_Dm2_scaled(u) / (2.0 * p)).epsilon(1e-10));
}

TEST_CASE("large-u asymptotics used by the high-temperature closed forms") {
    // u e^{u^2/4} D_{-1}(u) -> 1 and u^2 e^{u^2/4} D_{-2}(u) -> 1.
    const double u = 10.0;
    const double d1 = u * cylinder_Dm1_scaled(u);
    const double d2 = u * u * cylinder_Dm2_scaled(u);
    CHECK(d1 == doctest::Approx(1.0 - 1.0 / (u * u)).epsilon(1e-3));
    CHECK(d2 == doctest::Approx(1.0 - 3.0 / (u * u)).epsilon(1e-3));
    CHECK(d1 > 0.98);
    CHECK(d1 < 1.0);
    CHECK(d2 > 0.96);
    CHECK(d2 < 1.0);
}

TEST_CASE("scaled D_{-2} branches agree with the asymptotic series") {
    auto series = [](double u) {
        const double u2 = u * u;
        return (1.0 - 3.0 / u2 + 15.0 / (u2 * u2) - 105.0 / (u2 * u2 * u2)) / u2;
    };
    CHECK(cylinder_Dm2_scaled(49.0) ==
          doctest::Approx(series(49.0)).epsilon(5e-9)); // erfc route
    CHECK(cylinder_Dm2_scaled(51.0) ==
          doctest::Approx(series(51.0)).epsilon(1e-12)); // series route
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(gauss_integral_D(0.5, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(gauss_integral_D(1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(cylinder_D(3, 1.0), DomainError);
}

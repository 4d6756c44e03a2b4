#include "gupmag/jacobi.hpp"
#include "gupmag/quadrature.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>

using namespace gupmag;

namespace {

// Extended-precision forward recurrence, the accuracy oracle.
using big = boost::multiprecision::cpp_bin_float_50;

big jacobi_mp(int n, big a, big b, big x) {
    if (n == 0)
        return 1;
    big pm1 = 1;
    big p = (a + 1) + (a + b + 2) * (x - 1) / 2;
    for (int k = 2; k <= n; ++k) {
        const big s = 2 * k + a + b;
        const big c1 = 2 * k * (k + a + b) * (s - 2);
        const big c2 = (s - 1) * (a * a - b * b);
        const big c3 = (s - 2) * (s - 1) * s;
        const big c4 = 2 * (k + a - 1) * (k + b - 1) * s;
        const big next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

} // namespace

TEST_CASE("degree 0 is identically one") {
    for (double x : {-1.0, -0.3, 0.0, 0.9, 1.0})
        CHECK(jacobi(0, 2.7, 0.4, x) == 1.0);
}

TEST_CASE("degree 1 closed form") {
    for (double a : {-0.5, 0.0, 3.2})
        for (double b : {-0.9, 1.0})
            for (double x : {-1.0, -0.2, 0.7, 1.0}) {
                const double expected = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
                CHECK(jacobi(1, a, b, x) == doctest::Approx(expected).epsilon(1e-15));
            }
}

TEST_CASE("P_n(1) = binom(n + a, n)") {
    CHECK(jacobi(2, 1.0, 1.0, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
    JacobiPolynomial p5(5, 2.5, 0.7);
    CHECK(jacobi(5, 2.5, 0.7, 1.0) ==
          doctest::Approx(p5.value_at_one()).epsilon(1e-13));
}

TEST_CASE("recurrence vs closed forms of degree <= 3 on a 1001-point grid") {
    const double a = 1.3, b = 0.6;
    for (int i = 0; i <= 1000; ++i) {
        const double x = -1.0 + 2.0 * i / 1000.0;
        const double p2_expected =
            0.5 * ((a + 1) * (a + 2) + (a + b + 3) * (a + 2) * (x - 1) +
                   0.5 * (a + b + 3) * (a + b + 4) * 0.5 * (x - 1) * (x - 1));
        CHECK(jacobi(2, a, b, x) == doctest::Approx(p2_expected).epsilon(1e-13));
        // Degree 3 via the extended-precision recurrence (closed form is
        // unwieldy; three recurrence steps in 50-digit floats are exact for
        // this purpose).
        const double p3_expected =
            static_cast<double>(jacobi_mp(3, big(a), big(b), big(x)));
        CHECK(jacobi(3, a, b, x) == doctest::Approx(p3_expected).epsilon(1e-13));
    }
}

TEST_CASE("double recurrence matches 50-digit oracle to 1e-12 up to n = 200") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    for (auto [a, b] : {std::pair{0.5, 0.0}, {6.1, 1.0}, {21.0, 2.0}, {-0.4, 3.0}}) {
        for (int n : {5, 25, 100, 200}) {
            for (int trial = 0; trial < 12; ++trial) {
                const double x = ux(rng);
                const double got = jacobi(n, a, b, x);
                const double expected =
                    static_cast<double>(jacobi_mp(n, big(a), big(b), big(x)));
                const double scale = std::max(std::abs(expected), 1e-30);
                CHECK(std::abs(got - expected) / scale <= 1e-12);
            }
        }
    }
}

TEST_CASE("orthogonality under the Jacobi weight, by quadrature") {
    const double a = 1.8, b = 0.9;
    auto weighted = [&](int m, int n) {
        return integrate(
                   [&](double x) {
                       return std::pow(1.0 - x, a) * std::pow(1.0 + x, b) *
                              jacobi(m, a, b, x) * jacobi(n, a, b, x);
                   },
                   -1.0, 1.0, {1e-12, 1e-12, 4000})
            .value;
    };
    CHECK(std::abs(weighted(2, 5)) <= 1e-10);
    CHECK(std::abs(weighted(0, 1)) <= 1e-10);
    CHECK(weighted(3, 3) > 0.0);
}

TEST_CASE("parameter and degree validation") {
    CHECK_THROWS_AS(jacobi(-1, 1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(jacobi(501, 1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(jacobi(2, -1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(jacobi(2, 1.0, -1.5, 0.0), DomainError);
    CHECK_THROWS_AS(jacobi(2, 1.0, 1.0, 1.5), DomainError);
}

#include "gupmag/wavefunction.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace gupmag;

namespace {

SystemConfig cfg_eps(double eps, double field = 0.0) {
    // w0 = 1, so beta = eps / omega_tilde.
    const double wt = std::hypot(field, 1.0);
    return make_config(1.0, field, 5.0, 1.0, 1.0, eps / wt,
                       ThermalCheck::relaxed);
}

} // namespace

TEST_CASE("ground state shape: R(0) equals the normalization constant") {
    auto cfg = cfg_eps(0.2);
    RadialWavefunction R(QuantumNumbers::from_radial(0, 0), cfg);
    // P_0 = 1 and the envelope is 1 at p = 0.
    CHECK(R(0.0) == doctest::Approx(R.norm_constant()).epsilon(1e-15));
    // l > 0 vanishes at the origin.
    RadialWavefunction R1(QuantumNumbers::from_radial(0, 1), cfg);
    CHECK(R1(0.0) == 0.0);
}

TEST_CASE("Jacobi argument endpoints: -1 at p = 0, -> +1 as p -> inf") {
    const double beta = 0.3;
    auto z = [&](double p) {
        const double u = beta * p * p;
        return (u - 1.0) / (u + 1.0);
    };
    CHECK(z(0.0) == -1.0);
    CHECK(z(1e8) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(z(1e8) < 1.0);
}

TEST_CASE("explicit value at beta p^2 = 1 for n = 1, l = 0") {
    auto cfg = cfg_eps(0.2);
    const auto qn = QuantumNumbers::from_radial(1, 0);
    RadialWavefunction R(qn, cfg);
    const double lambda = R.lambda();
    const double p = 1.0 / std::sqrt(cfg.gup.beta); // beta p^2 = 1, z = 0
    const double expected = R.norm_constant() * std::pow(2.0, -lambda / 2.0) *
                            jacobi(1, lambda - 1.0, 0.0, 0.0);
    CHECK(R(p) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("unit norm under the deformed measure") {
    for (double eps : {0.05, 0.2, 0.5}) {
        auto cfg = cfg_eps(eps);
        for (auto [n, l] : {std::pair{0, 0}, {3, 1}, {8, 3}, {2, -2}}) {
            auto r = norm(QuantumNumbers::from_radial(n, l), cfg);
            CHECK(std::abs(r.value - 1.0) <= 1e-8);
        }
    }
}

TEST_CASE("orthogonality and symmetry of overlaps") {
    auto cfg = cfg_eps(0.2);
    CHECK(std::abs(overlap(0, 1, 0, cfg)) <= 1e-8);
    CHECK(std::abs(overlap(2, 5, 1, cfg)) <= 1e-8);
    CHECK(overlap(1, 3, 2, cfg) == overlap(3, 1, 2, cfg));
}

TEST_CASE("orthonormality matrix within 1e-7 of the identity") {
    for (double eps : {0.05, 0.2, 0.5})
        for (int l : {0, 1, 2, 3}) {
            auto cfg = cfg_eps(eps);
            for (int a = 0; a <= 4; ++a)
                for (int b = a; b <= 4; ++b) {
                    const double o = overlap(a, b, l, cfg);
                    CHECK(std::abs(o - (a == b ? 1.0 : 0.0)) <= 1e-7);
                }
        }
}

TEST_CASE("normalization depends on the field only through epsilon") {
    // Two configs with equal epsilon but different w/w0 split.
    auto a = cfg_eps(0.3, 0.0);
    auto b = cfg_eps(0.3, 2.0);
    CHECK(a.epsilon == doctest::Approx(b.epsilon).epsilon(1e-14));
    const auto qn = QuantumNumbers::from_radial(2, 1);
    RadialWavefunction Ra(qn, a), Rb(qn, b);
    CHECK(Ra.lambda() == doctest::Approx(Rb.lambda()).epsilon(1e-14));
    const double na = norm(qn, a).value;
    const double nb = norm(qn, b).value;
    CHECK(na == doctest::Approx(nb).epsilon(1e-10));
    // The momentum scaling differs (beta differs), the norm does not.
    CHECK(a.gup.beta != b.gup.beta);
}

TEST_CASE("tail exponent equals -lambda by log-log fit") {
    for (double eps : {0.1, 0.4})
        for (auto [n, l] : {std::pair{0, 0}, {2, 1}}) {
            auto cfg = cfg_eps(eps);
            const auto qn = QuantumNumbers::from_radial(n, l);
            RadialWavefunction R(qn, cfg);
            const double sqb = std::sqrt(cfg.gup.beta);
            // Fit log|R| vs log p over p in [1e2, 1e4]/sqrt(beta).
            std::vector<double> xs, ys;
            for (int i = 0; i <= 40; ++i) {
                const double p = std::pow(10.0, 2.0 + 2.0 * i / 40.0) / sqb;
                xs.push_back(std::log(p));
                ys.push_back(std::log(std::abs(R(p))));
            }
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            const double m = xs.size();
            for (std::size_t i = 0; i < xs.size(); ++i) {
                sx += xs[i];
                sy += ys[i];
                sxx += xs[i] * xs[i];
                sxy += xs[i] * ys[i];
            }
            const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
            CHECK(slope == doctest::Approx(-R.lambda()).epsilon(0.01 / R.lambda()));
        }
}

TEST_CASE("small-momentum behavior R ~ p^|l|") {
    auto cfg = cfg_eps(0.25);
    for (int l : {1, 2, 3}) {
        RadialWavefunction R(QuantumNumbers::from_radial(1, l), cfg);
        const double r1 = R(1e-4) / std::pow(1e-4, l);
        const double r2 = R(1e-5) / std::pow(1e-5, l);
        CHECK(r1 == doctest::Approx(r2).epsilon(1e-4));
        CHECK(std::abs(r2) > 0.0);
    }
}

TEST_CASE("p2 expectation finite on the upper branch, closed form at n = 0") {
    auto cfg = cfg_eps(0.2);
    const double got = p2_expectation(QuantumNumbers::from_radial(0, 0), cfg);
    const double lambda =
        lambda_exponent(cfg.epsilon, 0, LambdaBranch::upper);
    // Beta-function evaluation of the ground-state integral:
    // <p^2> = (|l| + 1) / (beta (lambda - 1)).
    CHECK(got ==
          doctest::Approx(1.0 / (cfg.gup.beta * (lambda - 1.0))).epsilon(1e-9));

    const double got21 = p2_expectation(QuantumNumbers::from_radial(0, 2), cfg);
    const double lambda2 = lambda_exponent(cfg.epsilon, 2, LambdaBranch::upper);
    CHECK(got21 ==
          doctest::Approx(3.0 / (cfg.gup.beta * (lambda2 - 1.0))).epsilon(1e-9));
}

TEST_CASE("p2 expectation diverges on the lower branch") {
    for (double eps : {0.05, 0.5, 0.95}) {
        auto cfg = cfg_eps(eps);
        CHECK_THROWS_AS(p2_expectation(QuantumNumbers::from_radial(0, 0), cfg,
                                       LambdaBranch::lower),
                        DivergentMomentError);
    }
}

TEST_CASE("undeformed configuration has no deformed eigenfunctions") {
    auto cfg = make_config(1.0, 0.0, 5.0, 1.0, 1.0, 0.0);
    CHECK_THROWS_AS(RadialWavefunction(QuantumNumbers::from_radial(0, 0), cfg),
                    UndeformedError);
    CHECK_THROWS_AS(p2_expectation(QuantumNumbers::from_radial(0, 0), cfg),
                    UndeformedError);
}

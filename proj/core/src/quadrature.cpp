#include "gupmag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace gupmag {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half; the
// rule is symmetric).  Nodes with odd index are the embedded Gauss points.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWeightsKronrod[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWeightsGauss[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
    double value;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double kronrod = kWeightsKronrod[7] * f(mid);
    double gauss = kWeightsGauss[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kronrod += kWeightsKronrod[i] * fsum;
        if (i % 2 == 1)
            gauss += kWeightsGauss[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;

    // Standard QUADPACK-style sharpened error estimate.
    const double diff = std::abs(kronrod - gauss);
    double err = diff;
    if (diff > 0.0)
        err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::abs(kronrod), 1e-300), 1.5));
    return {kronrod, err};
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadraturePolicy& policy) {
    QuadratureResult result;
    if (a == b)
        return result;

    std::priority_queue<Panel> queue;
    auto first = gk15(f, a, b);
    queue.push({a, b, first.value, first.error});
    result.evaluations = 15;
    result.panels = 1;

    double total_value = first.value;
    double total_error = first.error;

    while (total_error > std::max(policy.abs_tol, policy.rel_tol * std::abs(total_value))) {
        if (result.panels >= policy.max_panels)
            throw ConvergenceError("integrate: panel budget exhausted before "
                                   "reaching tolerance (divergent or too "
                                   "irregular integrand?)");
        Panel worst = queue.top();
        queue.pop();

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw ConvergenceError("integrate: panel collapsed to machine "
                                   "precision without converging");
        auto left = gk15(f, worst.a, mid);
        auto right = gk15(f, mid, worst.b);
        result.evaluations += 30;
        result.panels += 1;

        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.value, left.error});
        queue.push({mid, worst.b, right.value, right.error});
    }

    result.value = total_value;
    result.error = total_error;
    return result;
}

namespace {

/// The compactified integrand must decay faster than 1/(pi/2 - t) or the
/// measure integral diverges (logarithmically or worse).  Probing is
/// mandatory: in double precision tan() saturates near pi/2, so a divergent
/// integral would otherwise quietly "converge" to ~log(1/ulp).
void check_tail_decay(const std::function<double(double)>& g,
                      const QuadraturePolicy& policy) {
    double prev = std::numeric_limits<double>::infinity();
    for (double dist : {1e-4, 1e-6, 1e-8, 1e-10}) {
        const double s = std::abs(g(M_PI / 2.0 - dist)) * dist;
        if (!std::isfinite(s) || s > 0.9 * prev + policy.abs_tol)
            throw ConvergenceError(
                "deformed_quadrature: integrand tail does not decay against "
                "the deformed measure; integral diverges");
        prev = s;
    }
}

} // namespace

QuadratureResult deformed_quadrature(const std::function<double(double)>& f,
                                     double beta, const QuadraturePolicy& policy) {
    if (beta < 0.0)
        throw DomainError("deformed_quadrature: beta must be >= 0");

    if (beta > 0.0) {
        // p = tan(t)/sqrt(beta):  p dp/(1+beta p^2) = tan(t) dt / beta.
        const double sqb = std::sqrt(beta);
        auto g = [&](double t) {
            const double p = std::tan(t) / sqb;
            return f(p) * std::tan(t) / beta;
        };
        check_tail_decay(g, policy);
        return integrate(g, 0.0, M_PI / 2.0, policy);
    }

    // beta = 0: plain measure p dp, compactified by p = tan(t).
    auto g = [&](double t) {
        const double c = std::cos(t);
        const double p = std::tan(t);
        return f(p) * p / (c * c);
    };
    check_tail_decay(g, policy);
    return integrate(g, 0.0, M_PI / 2.0, policy);
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadraturePolicy& policy) {
    auto g = [&](double t) {
        const double c = std::cos(t);
        return f(std::tan(t)) / (c * c);
    };
    return integrate(g, 0.0, M_PI / 2.0, policy);
}

QuadratureResult integrate_real_line(const std::function<double(double)>& f,
                                     const QuadraturePolicy& policy) {
    auto g = [&](double t) {
        const double c = std::cos(t);
        return f(std::tan(t)) / (c * c);
    };
    return integrate(g, -M_PI / 2.0, M_PI / 2.0, policy);
}

} // namespace gupmag

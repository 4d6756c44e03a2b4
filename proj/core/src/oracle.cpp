#include "gupmag/oracle.hpp"

#include "gupmag/spectrum.hpp"
#include "gupmag/wavefunction.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace gupmag {

RadialGrid::RadialGrid(double beta_, int n_points_) : beta(beta_), n_points(n_points_) {
    if (!(beta > 0.0))
        throw DomainError("RadialGrid: beta must be > 0");
    if (n_points < 8)
        throw DomainError("RadialGrid: n_points must be >= 8");
}

double RadialGrid::xi_max() const { return M_PI / (2.0 * std::sqrt(beta)); }
double RadialGrid::step() const { return (M_PI / 2.0) / (n_points + 1); }
double RadialGrid::t(int k) const { return k * step(); }
double RadialGrid::xi(int k) const { return t(k) / std::sqrt(beta); }
double RadialGrid::momentum(int k) const { return std::tan(t(k)) / std::sqrt(beta); }

double analytic_dimensionless_energy(QuantumNumbers qn, double epsilon) {
    const double lambda = lambda_exponent(epsilon, qn.l, LambdaBranch::upper);
    const double N = qn.principal();
    const double l2 = double(qn.l) * qn.l;
    return 2.0 * (N + 1.0) * (lambda - 1.0) + N * N + l2 + 2.0 * N + 2.0;
}

double dimensionless_from_energy(double energy, int l, const SystemConfig& cfg) {
    if (!cfg.deformed())
        throw UndeformedError("dimensionless_from_energy: requires beta > 0");
    const auto& u = natural_units();
    const double wt = cfg.omega_tilde;
    return 2.0 * (energy - u.hbar * cfg.omega * l / 2.0) /
           (u.hbar * wt * cfg.epsilon);
}

namespace {

struct Tridiag {
    std::vector<double> diag; // size K
    std::vector<double> sup;  // A_{k,k+1}, size K-1
    std::vector<double> sub;  // A_{k+1,k}, size K-1
};

double cot(double t) { return std::cos(t) / std::sin(t); }

/// Second-order discretization of A = -d^2/dt^2 - w(t) d/dt + V(t) with the
/// boundary closures folded into the first and last rows.
Tridiag assemble(int l, double epsilon, const RadialGrid& grid) {
    const int K = grid.n_points;
    const double h = grid.step();
    const int al = std::abs(l);

    Tridiag A;
    A.diag.resize(K);
    A.sup.resize(K - 1);
    A.sub.resize(K - 1);

    for (int k = 1; k <= K; ++k) {
        const double tk = grid.t(k);
        const double w = cot(tk) + std::tan(tk);
        const double tn = std::tan(tk);
        const double V = double(al) * al * w * w + tn * tn / (epsilon * epsilon);

        const double lower = -1.0 / (h * h) + w / (2.0 * h); // couples R_{k-1}
        const double upper = -1.0 / (h * h) - w / (2.0 * h); // couples R_{k+1}

        A.diag[k - 1] = 2.0 / (h * h) + V;
        if (k == 1) {
            if (al == 0) {
                // R(0) = (4 R_1 - R_2)/3 from the even series R = c + a t^2.
                A.diag[0] += lower * 4.0 / 3.0;
                A.sup[0] = upper - lower / 3.0;
            } else {
                A.sup[0] = upper; // R(0) = 0
            }
        } else if (k == K) {
            A.sub[K - 2] = lower; // R(pi/2) = 0 (cos^lambda tail)
        } else {
            A.sub[k - 2] = lower;
            A.sup[k - 1] = upper;
        }
    }
    return A;
}

std::vector<double> lowest_k_similarity(const Tridiag& A, int k) {
    const int K = static_cast<int>(A.diag.size());
    // Diagonal similarity D A D^{-1} with d_{k+1}/d_k = sqrt(sup_k/sub_k)
    // turns the matrix symmetric when every product sup_k*sub_k > 0.  The
    // products are positive for all admissible grids (both entries negative:
    // h * w < 2 everywhere); treat a violation as a non-real-risk failure.
    Eigen::VectorXd diag(K), offdiag(K - 1);
    for (int i = 0; i < K; ++i)
        diag[i] = A.diag[i];
    for (int i = 0; i < K - 1; ++i) {
        const double prod = A.sup[i] * A.sub[i];
        if (!(prod > 0.0))
            throw NonRealEigenvalueError(
                "fd_eigensolve: off-diagonal sign pattern breaks the "
                "symmetrizing similarity; grid too coarse for the advection "
                "term");
        offdiag[i] = -std::sqrt(prod);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("fd_eigensolve: tridiagonal QL iteration failed");

    std::vector<double> evs(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + K);
    evs.resize(std::min<int>(k, K));
    return evs;
}

std::vector<double> lowest_k_dense(const Tridiag& A, int k) {
    const int K = static_cast<int>(A.diag.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(K, K);
    for (int i = 0; i < K; ++i)
        M(i, i) = A.diag[i];
    for (int i = 0; i < K - 1; ++i) {
        M(i, i + 1) = A.sup[i];
        M(i + 1, i) = A.sub[i];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(M, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("fd_eigensolve: dense eigensolver failed");

    std::vector<double> evs;
    evs.reserve(K);
    double scale = 0.0;
    for (int i = 0; i < K; ++i)
        scale = std::max(scale, std::abs(solver.eigenvalues()[i]));
    for (int i = 0; i < K; ++i) {
        const auto ev = solver.eigenvalues()[i];
        if (std::abs(ev.imag()) > 1e-10 * std::max(scale, 1.0))
            throw NonRealEigenvalueError(
                "fd_eigensolve: eigenvalue with non-negligible imaginary part "
                "(discretization defect)");
        evs.push_back(ev.real());
    }
    std::sort(evs.begin(), evs.end());
    evs.resize(std::min<int>(k, K));
    return evs;
}

/// LU with partial pivoting of a tridiagonal matrix (one superdiagonal of
/// fill-in), dgttrf style, for shifted inverse iteration.
struct TridiagLU {
    int K;
    std::vector<double> dl, d, du, du2;
    std::vector<int> pivot;

    TridiagLU(const Tridiag& A, double shift)
        : K(static_cast<int>(A.diag.size())), dl(A.sub), d(A.diag), du(A.sup),
          du2(K > 2 ? K - 2 : 0, 0.0), pivot(K, 0) {
        for (int i = 0; i < K; ++i)
            d[i] -= shift;
        for (int i = 0; i < K - 1; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                pivot[i] = 0;
                if (d[i] == 0.0)
                    d[i] = 1e-300;
                const double m = dl[i] / d[i];
                dl[i] = m;
                d[i + 1] -= m * du[i];
                if (i < K - 2)
                    du2[i] = 0.0;
            } else {
                pivot[i] = 1;
                const double m = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = m;
                const double tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - m * d[i + 1];
                if (i < K - 2) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -m * du[i + 1];
                }
            }
        }
        if (d[K - 1] == 0.0)
            d[K - 1] = 1e-300;
    }

    void solve(std::vector<double>& b) const {
        for (int i = 0; i < K - 1; ++i) {
            if (pivot[i] == 0) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                const double tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - dl[i] * b[i];
            }
        }
        b[K - 1] /= d[K - 1];
        if (K > 1)
            b[K - 2] = (b[K - 2] - du[K - 2] * b[K - 1]) / d[K - 2];
        for (int i = K - 3; i >= 0; --i)
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
};

} // namespace

EigenResult fd_eigensolve(int l, const SystemConfig& cfg, const RadialGrid& grid,
                          int k, EigensolveMethod method) {
    if (!cfg.deformed())
        throw UndeformedError("fd_eigensolve: requires beta > 0");
    if (k < 1 || k > 12)
        throw DomainError("fd_eigensolve: k must be in [1, 12]");
    if (method == EigensolveMethod::tridiagonal_similarity && grid.n_points < 1024)
        throw DomainError("fd_eigensolve: n_points must be >= 1024");
    if (grid.beta != cfg.gup.beta)
        throw DomainError("fd_eigensolve: grid beta does not match config");

    const Tridiag A = assemble(l, cfg.epsilon, grid);

    EigenResult result;
    result.l = l;
    result.n_points = grid.n_points;
    result.method = method;
    result.eigenvalues = method == EigensolveMethod::dense
                             ? lowest_k_dense(A, k)
                             : lowest_k_similarity(A, k);
    if (static_cast<int>(result.eigenvalues.size()) < k)
        throw ConvergenceError("fd_eigensolve: fewer eigenvalues than requested");
    return result;
}

std::vector<double> fd_eigenvector(int l, const SystemConfig& cfg,
                                   const RadialGrid& grid, double e) {
    const Tridiag A = assemble(l, cfg.epsilon, grid);
    const double shift = e * (1.0 + 1e-9) + 1e-12;
    TridiagLU lu(A, shift);

    std::vector<double> v(grid.n_points, 1.0);
    for (int iter = 0; iter < 6; ++iter) {
        lu.solve(v);
        double mx = 0.0;
        for (double x : v)
            mx = std::max(mx, std::abs(x));
        if (!(mx > 0.0) || !std::isfinite(mx))
            throw ConvergenceError("fd_eigenvector: inverse iteration broke down");
        for (double& x : v)
            x /= mx;
    }
    return v;
}

RichardsonEigenvalues fd_eigensolve_richardson(int l, const SystemConfig& cfg,
                                               int k, int n, double pair_rel_tol) {
    // n and 2n+1 interior points: the step (pi/2)/(n_points+1) halves exactly.
    RadialGrid coarse(cfg.gup.beta, n);
    RadialGrid fine(cfg.gup.beta, 2 * n + 1);

    RichardsonEigenvalues out;
    out.coarse = fd_eigensolve(l, cfg, coarse, k).eigenvalues;
    out.fine = fd_eigensolve(l, cfg, fine, k).eigenvalues;

    out.extrapolated.resize(k);
    out.order_estimate.resize(k);
    for (int i = 0; i < k; ++i) {
        const double e1 = out.coarse[i];
        const double e2 = out.fine[i];
        if (std::abs(e2 - e1) > pair_rel_tol * std::max(std::abs(e2), 1.0))
            throw ConvergenceError(
                "fd_eigensolve_richardson: grid pair disagrees beyond "
                "tolerance; refine the grids");
        const double ex = (4.0 * e2 - e1) / 3.0;
        out.extrapolated[i] = ex;
        const double num = std::abs(e1 - ex);
        const double den = std::abs(e2 - ex);
        out.order_estimate[i] =
            den > 0.0 && num > 0.0 ? std::log2(num / den) : 2.0;
    }
    return out;
}

double residual_check(QuantumNumbers qn, const SystemConfig& cfg,
                      const RadialGrid& grid, double energy_shift) {
    if (grid.n_points < 512)
        throw GridTooCoarseError(
            "residual_check: need at least 512 points to keep the stencil "
            "truncation error below the residual");

    const int K = grid.n_points;
    const double h = grid.step();
    const int al = qn.abs_l();
    const double eps = cfg.epsilon;
    const double e = analytic_dimensionless_energy(qn, eps) + energy_shift;

    RadialWavefunction R(qn, cfg);

    // Samples at nodes 0..K+1 (endpoints analytic: R(0) finite, R(pi/2) = 0).
    std::vector<double> r(K + 2);
    const double sqb = std::sqrt(grid.beta);
    for (int k = 0; k <= K + 1; ++k) {
        const double tk = k * h;
        if (k == K + 1)
            r[k] = 0.0;
        else
            r[k] = R(std::tan(tk) / sqb);
    }

    double max_abs_r = 0.0;
    for (double v : r)
        max_abs_r = std::max(max_abs_r, std::abs(v));

    double max_residual = 0.0;
    for (int k = 2; k <= K - 1; ++k) {
        const double tk = k * h;
        const double w = cot(tk) + std::tan(tk);
        const double tn = std::tan(tk);
        const double V = double(al) * al * w * w + tn * tn / (eps * eps);

        const double d2 = (-r[k - 2] + 16.0 * r[k - 1] - 30.0 * r[k] +
                           16.0 * r[k + 1] - r[k + 2]) /
                          (12.0 * h * h);
        const double d1 =
            (r[k - 2] - 8.0 * r[k - 1] + 8.0 * r[k + 1] - r[k + 2]) / (12.0 * h);

        const double residual = -d2 - w * d1 + V * r[k] - e * r[k];
        max_residual = std::max(max_residual, std::abs(residual));
    }
    return max_residual / max_abs_r;
}

} // namespace gupmag

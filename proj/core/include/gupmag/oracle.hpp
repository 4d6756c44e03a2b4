#pragma once

#include "gupmag/config.hpp"
#include "gupmag/quantum_numbers.hpp"

#include <vector>

namespace gupmag {

/// Uniform grid in the compactified coordinate xi = arctan(p sqrt(beta)) /
/// sqrt(beta).  Internally the scaled angle t = sqrt(beta) xi in (0, pi/2)
/// is used; nodes are t_k = k h with h = (pi/2)/(n_points + 1), endpoints
/// excluded (they are handled by the boundary closures).
struct RadialGrid {
    double beta = 0.0;
    int n_points = 2048;

    RadialGrid(double beta_, int n_points_);

    double xi_max() const;         // pi / (2 sqrt(beta))
    double step() const;           // h in the scaled angle t
    double t(int k) const;         // scaled angle of interior node k (1-based)
    double xi(int k) const;        // xi_k = t_k / sqrt(beta)
    double momentum(int k) const;  // p_k = tan(t_k)/sqrt(beta)
};

/// Dimensionless eigenvalue convention used by the oracle.  The radial
/// equation in the scaled angle t reads
///
///   -R'' - (cot t + tan t) R' + [ l^2 (cot t + tan t)^2 + tan^2(t)/eps^2 ] R
///     = e R,
///
/// whose analytic spectrum is e = 2(N+1)(lambda-1) + N^2 + l^2 + 2N + 2 on
/// the upper lambda branch.  The map back to the absolute energy,
///
///   E = pz^2/2m + hbar wt [ (eps/2) e + (w/2wt) l ],
///
/// is calibrated by the beta = 0, w = 0 limit: (eps/2) e -> N + 1, the
/// isotropic-oscillator values.
double analytic_dimensionless_energy(QuantumNumbers qn, double epsilon);

/// Inverse of the map above for pz = 0.
double dimensionless_from_energy(double energy, int l, const SystemConfig& cfg);

enum class EigensolveMethod {
    /// Balance the nonsymmetric tridiagonal discretization to a symmetric
    /// tridiagonal by an exact diagonal similarity, then use the dedicated
    /// symmetric solver.  Same spectrum, O(n^2), feasible at 4096 points.
    tridiagonal_similarity,
    /// Dense nonsymmetric eigensolve of the raw discretization, realness
    /// checked explicitly.  O(n^3); intended for cross-checks at small n.
    dense,
};

struct EigenResult {
    int l = 0;
    std::vector<double> eigenvalues; // ascending, dimensionless e convention
    int n_points = 0;
    EigensolveMethod method = EigensolveMethod::tridiagonal_similarity;
};

/// Lowest k eigenvalues of the discretized radial operator.  Boundary
/// closures: R ~ t^{|l|} at t -> 0 (Dirichlet for |l| >= 1, a quadratic
/// extrapolation R(0) = (4 R_1 - R_2)/3 for l = 0) and R ~ cos^lambda(t) at
/// t -> pi/2 (Dirichlet, since lambda > 0).
EigenResult fd_eigensolve(int l, const SystemConfig& cfg, const RadialGrid& grid,
                          int k,
                          EigensolveMethod method = EigensolveMethod::tridiagonal_similarity);

/// Eigenvector of the raw nonsymmetric discretization for the eigenvalue
/// nearest `e`, by shifted inverse iteration; normalized to unit maximum.
std::vector<double> fd_eigenvector(int l, const SystemConfig& cfg,
                                   const RadialGrid& grid, double e);

struct RichardsonEigenvalues {
    std::vector<double> extrapolated;   // (4 e_fine - e_coarse) / 3
    std::vector<double> coarse, fine;
    std::vector<double> order_estimate; // log2 |coarse-extrap|/|fine-extrap|
};

/// Same solve on grids with step h and h/2 plus second-order Richardson
/// extrapolation.  The grids have n and 2n+1 interior points so the steps
/// halve exactly.
RichardsonEigenvalues fd_eigensolve_richardson(int l, const SystemConfig& cfg,
                                               int k, int n = 2048,
                                               double pair_rel_tol = 1e-2);

/// Max-norm residual of the radial equation applied to the analytic
/// eigenfunction via centered 4th-order stencils on the grid,
/// max_k |(A R)(t_k) - (e + energy_shift) R(t_k)| / max_k |R(t_k)|.
/// `energy_shift` perturbs the eigenvalue to demonstrate sensitivity.
double residual_check(QuantumNumbers qn, const SystemConfig& cfg,
                      const RadialGrid& grid, double energy_shift = 0.0);

} // namespace gupmag

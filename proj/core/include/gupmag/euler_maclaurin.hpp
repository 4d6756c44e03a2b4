#pragma once

#include "gupmag/errors.hpp"

#include <array>
#include <span>

namespace gupmag {

/// Euler-Maclaurin approximation of a sum over the non-negative integers of
/// a smooth decaying f,
///
///   sum_{n>=0} f(n) = f(0)/2 + int_0^inf f(x) dx
///                     - sum_{p>=1} B_{2p}/(2p)! f^{(2p-1)}(0),
///
/// assembled from caller-supplied ingredients: the value f(0), the integral,
/// and the odd derivatives f'(0), f'''(0), f^{(5)}(0) as far as available.
/// Both the corrected and the correction-free values are reported so
/// "the Bernoulli terms are negligible" is a measurement, not an assumption.
struct EulerMaclaurinResult {
    double with_corrections = 0.0;
    double without_corrections = 0.0; // f(0)/2 + integral
    std::array<double, 3> correction_terms{}; // subtracted terms, by pair
    int order = 0;                            // pairs actually applied
};

EulerMaclaurinResult euler_maclaurin(double f_at_zero, double integral_of_f,
                                     std::span<const double> odd_derivs_at_zero,
                                     int order);

} // namespace gupmag

#include "gupmag/euler_maclaurin.hpp"

namespace gupmag {

EulerMaclaurinResult euler_maclaurin(double f_at_zero, double integral_of_f,
                                     std::span<const double> odd_derivs_at_zero,
                                     int order) {
    if (order < 0 || order > 3)
        throw DomainError("euler_maclaurin: order must be in [0, 3]");
    if (static_cast<int>(odd_derivs_at_zero.size()) < order)
        throw DomainError("euler_maclaurin: not enough derivatives for order");

    // B_2/2! = 1/12,  B_4/4! = -1/720,  B_6/6! = 1/30240.
    constexpr double kBernoulliOverFactorial[3] = {1.0 / 12.0, -1.0 / 720.0,
                                                   1.0 / 30240.0};

    EulerMaclaurinResult result;
    result.without_corrections = 0.5 * f_at_zero + integral_of_f;
    result.with_corrections = result.without_corrections;
    result.order = order;
    for (int p = 0; p < order; ++p) {
        const double term = kBernoulliOverFactorial[p] * odd_derivs_at_zero[p];
        result.correction_terms[p] = term;
        result.with_corrections -= term;
    }
    return result;
}

} // namespace gupmag

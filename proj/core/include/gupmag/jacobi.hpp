#pragma once

#include "gupmag/errors.hpp"

namespace gupmag {

/// Value of the Jacobi polynomial P_n^{(a,b)}(x) by forward three-term
/// recurrence in the degree.  Stable for x in [-1, 1] and a, b > -1.
/// Degrees above 500 are rejected.
double jacobi(int n, double a, double b, double x);

/// Jacobi polynomial of fixed degree and parameters, evaluable many times.
class JacobiPolynomial {
  public:
    JacobiPolynomial(int n, double a, double b);

    double operator()(double x) const { return jacobi(n_, a_, b_, x); }

    int degree() const { return n_; }
    double alpha() const { return a_; }
    double beta() const { return b_; }

    /// P_n(1) = binom(n + a, n), evaluated via lgamma.
    double value_at_one() const;

  private:
    int n_;
    double a_, b_;
};

} // namespace gupmag

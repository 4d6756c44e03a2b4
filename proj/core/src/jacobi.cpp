#include "gupmag/jacobi.hpp"

#include <cmath>

namespace gupmag {

namespace {
constexpr int kMaxDegree = 500;

void check_params(int n, double a, double b, double x) {
    if (n < 0)
        throw DomainError("jacobi: degree must be >= 0");
    if (n > kMaxDegree)
        throw DomainError("jacobi: degree cap 500 exceeded");
    if (!(a > -1.0) || !(b > -1.0))
        throw DomainError("jacobi: parameters must be > -1");
    if (!(x >= -1.0 && x <= 1.0))
        throw DomainError("jacobi: x must lie in [-1, 1]");
}
} // namespace

double jacobi(int n, double a, double b, double x) {
    check_params(n, a, b, x);

    if (n == 0)
        return 1.0;

    double pm1 = 1.0;                                    // P_0
    double p = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0); // P_1

    for (int k = 2; k <= n; ++k) {
        // 2k(k+a+b)(2k+a+b-2) P_k =
        //   (2k+a+b-1)[(2k+a+b)(2k+a+b-2)x + a^2-b^2] P_{k-1}
        //   - 2(k+a-1)(k+b-1)(2k+a+b) P_{k-2}
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (a * a - b * b);
        const double c3 = (s - 2.0) * (s - 1.0) * s;
        const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

JacobiPolynomial::JacobiPolynomial(int n, double a, double b) : n_(n), a_(a), b_(b) {
    check_params(n, a, b, 0.0);
}

double JacobiPolynomial::value_at_one() const {
    // binom(n + a, n) = Gamma(n+a+1) / (Gamma(a+1) n!)
    return std::exp(std::lgamma(n_ + a_ + 1.0) - std::lgamma(a_ + 1.0) -
                    std::lgamma(n_ + 1.0));
}

} // namespace gupmag

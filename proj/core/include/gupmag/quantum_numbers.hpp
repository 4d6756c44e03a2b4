#pragma once

#include "gupmag/errors.hpp"

#include <cstdlib>

namespace gupmag {

/// Radial/magnetic quantum numbers (n, l) of the two-dimensional problem and
/// their circular counterparts (n_d, n_g):
///
///   n_d = n + (|l| + l)/2,   n_g = n + (|l| - l)/2,
///   n   = min(n_d, n_g),     l   = n_d - n_g,       N = 2n + |l| = n_d + n_g.
struct QuantumNumbers {
    int n = 0; // radial, >= 0
    int l = 0; // magnetic, any integer

    static QuantumNumbers from_radial(int n, int l) {
        if (n < 0)
            throw DomainError("QuantumNumbers: n must be >= 0");
        return QuantumNumbers{n, l};
    }

    static QuantumNumbers from_circular(int n_d, int n_g) {
        if (n_d < 0 || n_g < 0)
            throw DomainError("QuantumNumbers: n_d, n_g must be >= 0");
        return QuantumNumbers{n_d < n_g ? n_d : n_g, n_d - n_g};
    }

    int abs_l() const { return std::abs(l); }
    int principal() const { return 2 * n + abs_l(); }
    int n_d() const { return n + (abs_l() + l) / 2; }
    int n_g() const { return n + (abs_l() - l) / 2; }

    bool operator==(const QuantumNumbers&) const = default;
};

} // namespace gupmag

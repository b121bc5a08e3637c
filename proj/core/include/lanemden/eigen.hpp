#pragma once

// Eigenvalue solvers around the linearization at the radial solution:
//  - the singular weighted radial problem  -psi'' - psi'/r - p|u|^{p-1} psi
//    = (beta/r^2) psi on (0,1), solved by shooting in beta with oscillation
//    counting;
//  - the mode-k radial reductions of the linearized operator (shooting in mu);
//  - a finite-difference annulus approximation serving as an independent
//    oracle for the weighted eigenvalues.

#include <vector>

#include "lanemden/radial.hpp"

namespace lanemden::eigen {

struct WeightedEigenpair {
    int i = 0;            // 1 or 2
    double beta = 0.0;    // beta_{i,rad}(p) < 0
    double decay = 0.0;   // sqrt(-beta), the admissible exponent at the origin
    // Eigenfunction on the shooting integrator's nodes, normalized to
    // sup-norm 1 with phi > 0 near the origin.
    std::vector<double> r, phi, dphi;

    double value(double radius) const;
    double derivative(double radius) const;
};

// i in {1, 2}: only two negative radial eigenvalues exist; beta = 0 is not an
// eigenvalue. Throws NoNegativeEigenvalue if the bracket [-C, 0) holds no
// i-th eigenvalue.
WeightedEigenpair weighted_radial_eigen(const radial::RadialProfile& profile, int i);

struct AnnulusApprox {
    int n = 0;       // inner radius 1/n
    int i = 0;       // eigenvalue index
    double beta_n = 0.0;
};

// i-th radial eigenvalue of the regular weighted problem on (1/n, 1) with
// Dirichlet ends, by a symmetric-tridiagonal finite-difference discretization.
AnnulusApprox annulus_radial_eigen(const radial::RadialProfile& profile, int n, int i);

struct ModeSpectrum {
    int k = 0;
    std::vector<double> mus;  // ascending, simple
    int count_negative = 0;
};

// First `count` eigenvalues of  -h'' - h'/r + k^2/r^2 h - p|u|^{p-1} h = mu h
// with h(1) = 0 (and h(0) = 0 for k >= 1).
ModeSpectrum mode_spectrum(const radial::RadialProfile& profile, int k, int count);

}  // namespace lanemden::eigen

#pragma once

// Bessel functions of the first kind, their positive zeros, and the Dirichlet
// eigenstructure of the Laplacian on the unit disk. All landmarks produced
// here are bit-stable: tolerances are fixed constants.

#include <vector>

namespace lanemden::specfun {

// J_n(x) for n >= 0, x >= 0. Power series below the x = 12 seam, backward
// (Miller) recurrence with even-order normalization above it.
double bessel_j(int n, double x);

// k-th positive zero nu_{nk} of J_n (k >= 1), absolute accuracy ~1e-12.
double bessel_zero(int n, int k);

struct DiskEigenmode {
    int n = 0;          // angular index
    int k = 0;          // zero index (>= 1)
    double nu = 0.0;    // nu_{nk}
    double lambda = 0.0;  // nu^2
    int multiplicity = 1;  // 1 if n == 0, else 2 (cos/sin pair)
};

struct DiskEigenstructure {
    std::vector<DiskEigenmode> entries;  // ascending in lambda

    // Number of eigenvalues (with multiplicity) strictly below `lambda`.
    int count_below(double lambda) const;
};

// Smallest Dirichlet eigenvalues of -Laplace on the unit disk; entries are
// included until their cumulative multiplicity reaches `count` (<= 200).
DiskEigenstructure disk_eigenstructure(int count);

// nu_{02}^2, the second radial Dirichlet eigenvalue of the disk.
double lambda_2_rad();

}  // namespace lanemden::specfun

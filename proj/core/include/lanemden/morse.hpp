#pragma once

// Assembly of the full, radial, and k-symmetric Morse indices of the radial
// solution from the two negative weighted radial eigenvalues, plus the
// degeneracy classification with its kernel, and the quadratic form of the
// linearized operator.

#include <string>
#include <vector>

#include "lanemden/radial.hpp"

namespace lanemden::morse {

struct DecompositionEntry {
    int k = 0;             // angular mode
    int i = 0;             // radial index (1 or 2)
    double value = 0.0;    // beta_{i,rad} + k^2
    int multiplicity = 1;  // 1 for k = 0, else 2
};

struct KernelDescription {
    bool degenerate = false;
    bool beta1_critical = false;  // beta1 = -j^2 within tol
    bool beta2_critical = false;  // beta2 = -1 within tol
    int j = 0;
    int dimension = 0;  // 0, 2, or 4

    // Kernel dimension after restricting to the k-symmetric space, k >= 2:
    // the sin generator and the beta2 pair drop out, leaving at most
    // span{phi1 cos(j theta)} when k divides j.
    int dimension_in_symmetric(int k) const;

    std::string describe() const;
};

struct MorseReport {
    double p = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    int j = 0;        // unique integer with -j^2 <= beta1 < -(j-1)^2
    int m_full = 0;   // 2j
    int m_rad = 2;
    std::vector<int> m_k;  // m_k[k-1] for k = 1..K
    std::vector<DecompositionEntry> decomposition;
    bool degenerate = false;
    KernelDescription kernel;
};

// Counting rules: radial entries always count; sin modes never count in the
// symmetric spaces; the cos mode q counts in the k-symmetric space iff k
// divides q. Throws InvalidOrdering unless beta1 < beta2 < 0.
MorseReport assemble_morse(double beta1, double beta2, int K = 8, double p = 0.0,
                           double degeneracy_tol = 1e-5);

KernelDescription classify_degeneracy(double beta1, double beta2, double tol = 1e-5);

// Test function c(r) * cos(k theta) (or sin) given by nodal values and
// derivatives; c(1) = 0 is the caller's responsibility.
struct RadialModeFunction {
    int k = 0;
    bool sine = false;
    std::vector<double> r, value, deriv;
};

// Q_p(v) = int_B |grad v|^2 - p |u_p|^{p-1} v^2 for v given as a sum of
// mode functions; angular orthogonality reduces it to 1D radial integrals.
double quadratic_form(const radial::RadialProfile& profile,
                      const std::vector<RadialModeFunction>& modes);

}  // namespace lanemden::morse

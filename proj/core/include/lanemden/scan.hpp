#pragma once

// Locates the degenerate exponents: the values of p where beta_{1,rad}(p)+j^2
// changes sign (the non-radial bifurcation points), plus the analogous scan
// for beta_{2,rad}(p) = -1 which is reported without any existence claim.

#include <vector>

#include "lanemden/radial.hpp"

namespace lanemden::scan {

struct DegenerateExponent {
    int j = 0;
    double p_star = 0.0;
    double p_lo = 0.0, p_hi = 0.0;  // sign-change bracket
    int direction = 0;              // +1: - to +, -1: + to -, 0: tangential touch
    double residual = 0.0;          // |beta_1(p_star) + j^2|
};

struct CurvePoint {
    double p = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    bool ok = false;
};

// beta_{1,rad}, beta_{2,rad} on a geometric grid in p-1. Failed points carry
// ok = false. Grid evaluations run on up to `threads` workers (0 = hardware).
std::vector<CurvePoint> sweep_beta(double p_lo, double p_hi, int grid_count, int threads = 0);

// Sign changes of beta1 + j^2 extracted from a sweep and refined by bisection
// to |dp| < 1e-6, in increasing p order. Grid points with |beta1 + j^2| below
// touch_tol that are not part of a sign change are reported with direction 0
// and excluded from the crossing set by callers that follow the definition.
std::vector<DegenerateExponent> crossings_from_curve(const std::vector<CurvePoint>& curve, int j,
                                                     double touch_tol = 1e-6);

// Full scan: geometric sweep plus refinement.
std::vector<DegenerateExponent> scan_degenerate(int j, double p_lo, double p_hi, int grid_count,
                                                int threads = 0);

// Bisection refinement of a verified bracket. Throws LostBracket when the
// endpoint signs do not differ.
DegenerateExponent refine_crossing(int j, double p_lo, double p_hi);

// Crossings of beta_{2,rad}(p) = -1 (reported separately; possibly empty).
std::vector<DegenerateExponent> scan_secondary(double p_lo, double p_hi, int grid_count,
                                               int threads = 0);

// beta_{1,rad}(p) + j^2 with solver failures converted to ProfileFailure.
double beta1_level(double p, int j);

}  // namespace lanemden::scan

#pragma once

// Validation of the two asymptotic regimes of the radial solution: the p -> 1
// convergence to the second radial disk eigenfunction with its expansion
// constant, and the p -> infinity eigenvalue limit -(ell^2+2)/2.

#include <vector>

namespace lanemden::asym {

// Reference constants of the large-p regime.
inline constexpr double kEll = 7.1979;
inline constexpr double kBeta1Limit = -(kEll * kEll + 2.0) / 2.0;  // ~ -26.905

// c = int_B phi^2 log|phi| / int_B phi^2 with phi = J0(nu_02 |x|), by
// adaptive radial quadrature; quadrature_points sets the initial panelling
// (>= 256). Absolute accuracy ~1e-8; the log singularity on the interior
// zero circle is integrable.
double compute_ctilde(int quadrature_points = 1024);

struct NearOneReport {
    std::vector<double> p_values;
    std::vector<double> sup_errors;     // sup_r |u/alpha - J0(nu02 r)|
    std::vector<double> alpha_powers;   // alpha^{p-1}
    double c_tilde = 0.0;               // independent quadrature value
    double fitted_slope = 0.0;          // least-squares slope of alpha^{p-1} in (p-1)
    double fitted_intercept = 0.0;      // -> lambda_{2,rad}
    double slope_rel_error = 0.0;       // vs -lambda_{2,rad} * c_tilde
    double max_fit_residual = 0.0;      // excluding the smallest p-1 point
};

// pre: all p in (1, 1.2], given in decreasing order toward 1.
NearOneReport validate_near_one(const std::vector<double>& p_sequence);

struct LargePReport {
    std::vector<double> p_values;       // points actually reached
    std::vector<double> ell_estimates;  // s_p / eps_minus
    std::vector<double> beta1_values;
    double ell_from_beta1 = 0.0;        // sqrt(-2 beta1 - 2) at the largest p
    double gap_at_max_p = 0.0;          // |beta1 - limit| at the largest p
    bool monotone_trend = false;        // gap to the limit non-increasing
    bool reached_target = false;        // largest requested p was stable
};

// pre: p increasing; integration failures beyond the stable horizon truncate
// the sequence (ProfileFailure if not even the first point is solvable).
LargePReport validate_large_p(const std::vector<double>& p_sequence);

}  // namespace lanemden::asym

#pragma once

// Shooting solver for the sign-changing radial solution of the Lane-Emden
// problem on the unit disk: u'' + u'/r + |u|^{p-1} u = 0, u'(0) = 0, u(1) = 0,
// u(0) > 0, with a prescribed number of nodal regions. The scaling group of
// the equation turns the solve into a single integration plus a rescaling; no
// search over the center value is needed.

#include <vector>

#include "lanemden/ode.hpp"

namespace lanemden::radial {

struct RadialProfile {
    double p = 0.0;
    int m = 0;  // nodal-region count
    // Strictly increasing radii with grid[0] = 0 and grid.back() = 1, taken
    // from the integrator's accepted steps plus the landmark points.
    std::vector<double> grid;
    std::vector<double> u;
    std::vector<double> du;
    double alpha = 0.0;           // u(0) = max norm
    std::vector<double> zeros;    // the m-1 interior zeros
    double s_p = 0.0;             // minimum-point radius (m = 2)
    double u_min = 0.0;           // u(s_p) < 0  (m = 2)
    double eps_plus = 0.0;        // (p alpha^{p-1})^{-1/2}
    double eps_minus = 0.0;       // (p |u_min|^{p-1})^{-1/2}

    // Cubic Hermite interpolation on the stored grid.
    double value(double r) const;
    double derivative(double r) const;
    // p |u(r)|^{p-1}, the linearization potential.
    double weight(double r) const;
};

struct IvpResult {
    double p = 0.0;
    double alpha = 0.0;
    double r_start = 0.0;
    DenseTrajectory<2> trajectory;        // state (u, u')
    std::vector<double> zeros;            // zeros of u, in order
    std::vector<double> derivative_zeros; // interior critical points (u' = 0)
};

// Integrates the initial value problem from a second-order series start at
// r0 = 1e-6 up to r_stop, recording sign changes of u and of u'. If
// stop_after_zeros > 0 the integration halts shortly after that many zeros.
IvpResult integrate_ivp(double p, double alpha, double r_stop,
                        int stop_after_zeros = -1, const OdeOptions* opts = nullptr);

// Unique radial solution with m nodal regions and u(0) > 0. 1 <= m <= 5.
RadialProfile solve_radial(double p, int m, const OdeOptions* opts = nullptr);

// Residual of the scaling identity: rescales the profile by T and measures
// how well the rescaled function solves the radial equation on (0, T), via
// the first integral  r w' - r_a w'(r_a) + int_{r_a}^r s |w|^{p-1} w ds = 0.
double scaling_check(const RadialProfile& profile, double T);

// Sup of the first-integral equation residual of sign*u over the profile
// grid, normalized by the flux scale. sign = -1 checks that -u solves too.
double ode_residual(const RadialProfile& profile, double sign = 1.0);

}  // namespace lanemden::radial

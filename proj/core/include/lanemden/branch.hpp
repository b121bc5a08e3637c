#pragma once

// Non-radial solutions in the k-symmetric space: Fourier collocation in the
// angle (cos(k q theta) modes), finite differences on a solution-adapted
// radial grid, Newton correction with amplitude pinning for branch switching,
// and pseudo-arclength continuation. Also the discrete diagnostics around a
// bifurcation point: critical exponent on the discrete operator, kernel
// singular values, negative-eigenvalue counts, nodal topology, cone
// membership, and energy.

#include <vector>

#include "lanemden/radial.hpp"
#include "lanemden/scan.hpp"

namespace lanemden::branch {

struct FourierSolution {
    double p = 0.0;
    int k = 1;   // symmetry order
    int Q = 8;   // highest retained mode; frequencies are 0, k, 2k, ..., Qk
    std::vector<double> radial_grid;          // interior collocation radii
    std::vector<std::vector<double>> modes;   // modes[q][i] = c_q(r_i)
    double residual = 0.0;                    // discrete residual at last solve

    // v(r, theta) by Hermite-free nodal interpolation (linear between nodes
    // is enough for diagnostics; the collocation values are exact).
    double value(double r, double theta) const;
    double theta_derivative(double r, double theta) const;
    // Mass of the non-radial modes relative to the radial one.
    double nonradial_mass() const;
};

struct BranchOptions {
    int max_modes = 8;          // Q
    int radial_points = 256;    // nominal collocation size
    double newton_tol = 1e-10;  // max-norm residual target
    int max_newton = 25;
    double min_step = 1e-5;     // arclength
    double max_step = 0.25;
    double initial_step = 0.02;
    double window_lo = 1.01;    // continuation window in p
    double window_hi = 12.0;
    double radial_return_tol = 1e-10;
};

enum class Termination { window_exit, step_failure, fold_detected, radial_return, max_points };

struct BranchPoint {
    double p = 0.0;
    double arclength = 0.0;
    double amplitude = 0.0;  // signed q=1 coefficient at its peak radius
    double residual = 0.0;
    FourierSolution solution;
};

struct BranchSegment {
    int k = 0;
    scan::DegenerateExponent origin;
    std::vector<BranchPoint> points;
    std::vector<int> fold_indices;  // points where the p-tangent flips sign
    Termination termination = Termination::max_points;
};

struct NodalTopology {
    int nodal_domain_count = 0;
    bool touches_boundary = false;
    bool quasi_radial = false;
    int nodal_components = 0;  // connected components of the zero set
};

struct KernelCheck {
    double p_critical = 0.0;   // discrete critical exponent
    double sigma_min = 0.0;    // smallest singular value of I - T'(p, u_p)
    double sigma_next = 0.0;   // second smallest
    double sigma_scale = 0.0;  // largest singular value (the relative scale)
    double cosine = 0.0;       // |<v_min, phi_1 cos(k theta)>| alignment
};

// The radial solution embedded into the k-symmetric discretization (all mass
// in the q = 0 mode), Newton-polished on the discrete system.
FourierSolution embed_radial(const radial::RadialProfile& profile, int k,
                             const BranchOptions& opts = {});

// Collocation residual of Delta v + |v|^{p-1} v re-projected on the retained
// modes; max over modes and nodes.
double residual_norm(const FourierSolution& sol);

// Residual of an interpolated radial profile pushed through the discrete
// operator on an n-point grid (for order-of-consistency checks).
double radial_embedding_residual(const radial::RadialProfile& profile, int k, int n_points);

// Switches onto the non-radial branch at a detected degenerate exponent:
// predictor u + amplitude * phi1(r) cos(k theta), corrector Newton with the
// q=1 amplitude pinned at the radius where phi1 peaks and p free.
// Throws CollapsedToRadial if the corrected solution lost its q >= 1 mass.
FourierSolution branch_switch(const scan::DegenerateExponent& origin, double amplitude,
                              const BranchOptions& opts = {});

// Pseudo-arclength continuation from a converged non-radial solution.
// direction = +1 or -1 selects the initial tangent orientation.
BranchSegment continue_branch(const FourierSolution& seed, int direction, int max_points,
                              const BranchOptions& opts = {});

// Sign-component analysis of v on a fine polar grid.
NodalTopology nodal_topology(const FourierSolution& sol);

// Max positive value of v_theta on the fundamental wedge (0, pi/k); members
// of the cone K_k return 0 up to roundoff.
double cone_violation(const FourierSolution& sol);
bool cone_membership(const FourierSolution& sol, double tol = 1e-8);

// E_p(v) = 1/2 int |grad v|^2 - 1/(p+1) int |v|^{p+1}.
double energy(const FourierSolution& sol);

// Discrete critical exponent: the p where the smallest eigenvalue of the
// frequency-k block of the linearization at the discrete radial solution
// crosses zero, bisected inside [p_lo, p_hi] on a fixed grid built at the
// bracket midpoint.
double discrete_critical_exponent(int k, double p_lo, double p_hi,
                                  const BranchOptions& opts = {});

// Negative eigenvalues of the discrete k-symmetric linearization at the
// radial solution (sum of per-mode Sturm counts).
int negative_eigenvalue_count(int k, double p, const BranchOptions& opts = {});

// Singular-value structure of I - T'(p, u_p) restricted to the k-symmetric
// basis at the discrete critical exponent located inside [p_lo, p_hi].
KernelCheck kernel_check(int k, double p_lo, double p_hi, const BranchOptions& opts = {});

}  // namespace lanemden::branch

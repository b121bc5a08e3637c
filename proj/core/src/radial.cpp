#include "lanemden/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lanemden/errors.hpp"
#include "lanemden/interp.hpp"
#include "lanemden/numerics.hpp"

namespace lanemden::radial {

namespace {

constexpr double kStartRadius = 1e-6;

// Collects the parameter; |u|^{p-1} u is written sign-safely.
struct LaneEmdenRhs {
    double p;
    void operator()(double r, const std::array<double, 2>& y, std::array<double, 2>& dy) const {
        const double u = y[0];
        dy[0] = y[1];
        dy[1] = -y[1] / r - std::pow(std::abs(u), p - 1.0) * u;
    }
};

// Roots of one dense-output component inside a segment, appended in order.
template <int N>
void segment_roots(const DenseSegment<N>& seg, int comp, std::vector<double>& out) {
    constexpr int kSamples = 8;
    const double t0 = seg.t0, t1 = seg.t0 + seg.h;
    double a = t0, fa = seg.eval(a, comp);
    for (int i = 1; i <= kSamples; ++i) {
        const double b = t0 + (t1 - t0) * i / kSamples;
        const double fb = seg.eval(b, comp);
        if (fa == 0.0) {
            out.push_back(a);
        } else if (fa * fb < 0.0) {
            out.push_back(brent_root([&](double t) { return seg.eval(t, comp); }, a, b, 1e-15));
        }
        a = b;
        fa = fb;
    }
}

}  // namespace

double RadialProfile::value(double r) const {
    return CubicHermiteView{&grid, &u, &du}.value(r);
}

double RadialProfile::derivative(double r) const {
    return CubicHermiteView{&grid, &u, &du}.derivative(r);
}

double RadialProfile::weight(double r) const {
    const double v = value(r);
    return p * std::pow(std::abs(v), p - 1.0);
}

IvpResult integrate_ivp(double p, double alpha, double r_stop, int stop_after_zeros,
                        const OdeOptions* opts_in) {
    if (!(p > 1.0)) throw std::invalid_argument("integrate_ivp: p must exceed 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("integrate_ivp: alpha must be positive");

    OdeOptions opts;
    opts.rtol = 1e-11;
    opts.atol = 1e-13;
    opts.initial_step = 1e-5;
    opts.max_step = 0.02;
    if (opts_in) opts = *opts_in;

    // Series start removing the 1/r singularity with O(r0^4) consistency:
    // u = alpha - alpha^p r^2/4 + O(r^4). The start radius sits well inside
    // the peak scale (p alpha^{p-1})^{-1/2}, which collapses like e^{-p/2}
    // for large p; 1e-6 alone would put the start outside the peak there.
    const double ap = std::pow(alpha, p);
    const double peak_scale = 1.0 / std::sqrt(p * std::pow(alpha, p - 1.0));
    const double r0 = std::min(kStartRadius, 1e-3 * peak_scale);
    opts.initial_step = std::min(opts.initial_step, 0.1 * r0);
    std::array<double, 2> y0 = {alpha - 0.25 * ap * r0 * r0, -0.5 * ap * r0};

    IvpResult res;
    res.p = p;
    res.alpha = alpha;
    res.r_start = r0;

    int zero_count = 0;
    auto watcher = [&](const DenseTrajectory<2>& traj) -> bool {
        if (stop_after_zeros <= 0) return true;
        const auto& yprev = traj.y[traj.y.size() - 2];
        const auto& ycur = traj.y.back();
        if (yprev[0] * ycur[0] <= 0.0) {
            if (++zero_count >= stop_after_zeros) return false;
        }
        return true;
    };

    auto stepper = make_dopri5<2>(LaneEmdenRhs{p}, opts);
    res.trajectory = stepper.integrate(r0, y0, r_stop, watcher);

    for (const auto& seg : res.trajectory.segments) {
        segment_roots(seg, 0, res.zeros);
        segment_roots(seg, 1, res.derivative_zeros);
    }
    return res;
}

RadialProfile solve_radial(double p, int m, const OdeOptions* opts) {
    if (!(p > 1.0)) throw std::invalid_argument("solve_radial: p must exceed 1");
    if (m < 1 || m > 5) throw std::invalid_argument("solve_radial: m must be in [1, 5]");

    // Shoot once and rescale; scale covariance maps the m-th zero R_m of the
    // trajectory onto the unit disk:  u(r) = R_m^{2/(p-1)} w(R_m r) for the
    // start value w(0) = 1, and analogously for any start value. The start
    // value only conditions the integration: for large p the zeros of the
    // unit-start trajectory drift to exponentially large radii, so the shot
    // is centered near the limit value e of u_p(0) instead.
    const double alpha_guess =
        (p <= 4.0) ? 1.0 : std::exp(1.05 + 2.3 / (p - 1.0));
    IvpResult ivp;
    bool found = false;
    for (double alpha0 : {alpha_guess, 1.9, 3.4, 5.0}) {
        double horizon = 24.0;
        while (horizon <= 400.0) {
            ivp = integrate_ivp(p, alpha0, horizon, m, opts);
            if (static_cast<int>(ivp.zeros.size()) >= m) {
                found = true;
                break;
            }
            horizon *= 2.0;
        }
        if (found) break;
    }
    if (!found)
        throw NotBracketed("solve_radial: fewer than " + std::to_string(m) +
                           " zeros before the integration horizon");

    const double T = ivp.zeros[m - 1];
    const double scale = std::pow(T, 2.0 / (p - 1.0));

    RadialProfile prof;
    prof.p = p;
    prof.m = m;
    prof.alpha = scale * ivp.alpha;

    std::vector<double> nodes;
    for (double rho : ivp.trajectory.t) {
        if (rho >= T) break;
        nodes.push_back(rho);
    }
    for (int i = 0; i + 1 < m; ++i) nodes.push_back(ivp.zeros[i]);
    for (double rc : ivp.derivative_zeros)
        if (rc < T) nodes.push_back(rc);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [](double a, double b) {
                                return std::abs(a - b) <
                                       1e-12 * std::max(std::abs(a), std::abs(b));
                            }),
                nodes.end());

    prof.grid.push_back(0.0);
    prof.u.push_back(prof.alpha);
    prof.du.push_back(0.0);
    std::array<double, 2> y{};
    for (double rho : nodes) {
        ivp.trajectory.eval(rho, y);
        prof.grid.push_back(rho / T);
        prof.u.push_back(scale * y[0]);
        prof.du.push_back(scale * T * y[1]);
    }
    ivp.trajectory.eval(T, y);
    prof.grid.push_back(1.0);
    prof.u.push_back(0.0);
    prof.du.push_back(scale * T * y[1]);

    for (int i = 0; i + 1 < m; ++i) prof.zeros.push_back(ivp.zeros[i] / T);

    if (m == 2) {
        // Exactly one critical point in the second nodal region.
        double sp = 0.0;
        for (double rc : ivp.derivative_zeros) {
            if (rc > ivp.zeros[0] && rc < T) {
                sp = rc / T;
                break;
            }
        }
        if (sp == 0.0) throw NotBracketed("solve_radial: interior minimum not located");
        prof.s_p = sp;
        prof.u_min = prof.value(sp);
        prof.eps_minus = 1.0 / std::sqrt(p * std::pow(std::abs(prof.u_min), p - 1.0));
    }
    prof.eps_plus = 1.0 / std::sqrt(p * std::pow(prof.alpha, p - 1.0));
    return prof;
}

namespace {

// Sup over the rescaled profile nodes of the first-integral residual
// |r w' - r_a w'(r_a) + int_{r_a}^r s |w|^{p-1} w ds| for w(r) =
// lambda u(sigma r). The quadrature walks the profile's own cells, whose
// density already resolves every layer the integrator resolved; zeros of u
// are cell boundaries, so |w|^{p-1} w is smooth inside each cell.
double first_integral_residual(const RadialProfile& prof, double lambda, double sigma) {
    const double p = prof.p;
    auto g = [&](double rho) {  // integrand in profile coordinates
        const double v = lambda * prof.value(rho);
        return (rho / sigma) * std::pow(std::abs(v), p - 1.0) * v / sigma;
    };

    const std::size_t first = 1;  // skip the synthetic r = 0 node
    const double flux0 = (prof.grid[first] / sigma) * lambda * sigma * prof.du[first];
    double integral = 0.0;
    double worst = 0.0, flux_scale = std::abs(flux0);
    for (std::size_t i = first; i + 1 < prof.grid.size(); ++i) {
        const double a = prof.grid[i], b = prof.grid[i + 1];
        // Two Simpson panels per Hermite cell.
        const double m = 0.5 * (a + b);
        integral += (b - a) / 12.0 *
                    (g(a) + 4.0 * g(0.5 * (a + m)) + 2.0 * g(m) + 4.0 * g(0.5 * (m + b)) + g(b));
        const double flux = (b / sigma) * lambda * sigma * prof.du[i + 1];
        flux_scale = std::max(flux_scale, std::abs(flux));
        worst = std::max(worst, std::abs(flux - flux0 + integral));
    }
    return worst / std::max(1.0, flux_scale);
}

}  // namespace

double scaling_check(const RadialProfile& profile, double T) {
    if (!(T > 0.0)) throw std::invalid_argument("scaling_check: T must be positive");
    const double lambda = std::pow(T, -2.0 / (profile.p - 1.0));
    // w(r) = T^{-2/(p-1)} u(r/T) on (0, T).
    return first_integral_residual(profile, lambda, 1.0 / T);
}

double ode_residual(const RadialProfile& profile, double sign) {
    return first_integral_residual(profile, sign, 1.0);
}

}  // namespace lanemden::radial

#include "lanemden/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lanemden/errors.hpp"
#include "lanemden/interp.hpp"
#include "lanemden/numerics.hpp"
#include "lanemden/ode.hpp"
#include "lanemden/specfun.hpp"

namespace lanemden::eigen {

namespace {

// The shooting start must sit inside the peak scale of the potential: the
// admissible r^s behavior holds where p|u|^{p-1} r^2 is negligible, and the
// peak scale eps_plus collapses like e^{-p/2} for large p.
double shoot_start(const radial::RadialProfile& prof) {
    return std::min(1e-6, 1e-3 * prof.eps_plus);
}

OdeOptions shoot_options(double r0) {
    OdeOptions o;
    o.rtol = 1e-10;
    o.atol = 1e-14;
    o.initial_step = std::min(1e-5, 0.1 * r0);
    o.max_step = 0.02;
    return o;
}

struct Shot {
    int zeros = 0;                  // interior sign changes on (r0, 1)
    std::vector<double> r, v, dv;   // nodes at a common scale (when requested)
};

// Integrates h'' = -h'/r + coef(r) h from r0 to 1 with piecewise
// renormalization: the dominant solution can grow past double range when r0
// is many decades below 1. Zero counting and the eigenfunction shape are
// scale-free, so each piece is rescaled by 1e-250 when it saturates; nodes of
// early pieces underflow to zero at the final common scale, which is exact to
// double precision.
template <class Coef>
Shot shoot(const Coef& coef, double r0, double v0, double dv0, bool keep_nodes) {
    auto rhs = [&coef](double r, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        dy[0] = y[1];
        dy[1] = -y[1] / r + coef(r) * y[0];
    };
    constexpr double kBig = 1e250;
    constexpr double kShrink = 1e-250;

    Shot s;
    std::vector<std::vector<std::array<double, 3>>> pieces;
    double t = r0;
    std::array<double, 2> y = {v0, dv0};
    OdeOptions opts = shoot_options(r0);

    for (int piece = 0; piece < 64 && t < 1.0; ++piece) {
        auto stepper = make_dopri5<2>(rhs, opts);
        auto traj = stepper.integrate(t, y, 1.0, [](const DenseTrajectory<2>& tr) {
            const auto& yy = tr.y.back();
            return std::abs(yy[0]) < kBig && std::abs(yy[1]) < kBig;
        });

        constexpr int kSamples = 8;
        double prev = traj.y.front()[0];
        for (const auto& seg : traj.segments) {
            for (int i = 1; i <= kSamples; ++i) {
                const double rq = seg.t0 + seg.h * i / kSamples;
                const double vq = seg.eval(rq, 0);
                if (prev * vq < 0.0) ++s.zeros;
                prev = vq;
            }
        }
        if (keep_nodes) {
            auto& nodes = pieces.emplace_back();
            for (std::size_t i = 0; i < traj.t.size(); ++i)
                nodes.push_back({traj.t[i], traj.y[i][0], traj.y[i][1]});
        }
        t = traj.t.back();
        y = traj.y.back();
        if (t < 1.0) {
            y[0] *= kShrink;
            y[1] *= kShrink;
            opts.initial_step = traj.segments.empty() ? opts.initial_step
                                                      : traj.segments.back().h;
        }
    }

    if (keep_nodes && !pieces.empty()) {
        double factor = 1.0;
        std::vector<double> piece_factor(pieces.size());
        for (std::size_t i = pieces.size(); i-- > 0;) {
            piece_factor[i] = factor;
            factor *= kShrink;
        }
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            for (std::size_t j = 0; j < pieces[i].size(); ++j) {
                if (i > 0 && j == 0) continue;  // seam node repeats
                s.r.push_back(pieces[i][j][0]);
                s.v.push_back(pieces[i][j][1] * piece_factor[i]);
                s.dv.push_back(pieces[i][j][2] * piece_factor[i]);
            }
        }
    }
    return s;
}

int weighted_zero_count(const radial::RadialProfile& prof, double beta) {
    const double s = std::sqrt(-beta);
    const double r0 = shoot_start(prof);
    auto coef = [&prof, beta](double r) { return -beta / (r * r) - prof.weight(r); };
    return shoot(coef, r0, 1.0, s / r0, false).zeros;
}

int mode_zero_count(const radial::RadialProfile& prof, int k, double mu) {
    const double r0 = shoot_start(prof);
    auto coef = [&prof, k, mu](double r) {
        return static_cast<double>(k) * k / (r * r) - prof.weight(r) - mu;
    };
    if (k == 0) {
        const double q0 = prof.weight(0.0);
        return shoot(coef, r0, 1.0 - 0.25 * (q0 + mu) * r0 * r0, -0.5 * (q0 + mu) * r0, false)
            .zeros;
    }
    return shoot(coef, r0, 1.0, static_cast<double>(k) / r0, false).zeros;
}

}  // namespace

double WeightedEigenpair::value(double radius) const {
    return CubicHermiteView{&r, &phi, &dphi}.value(radius);
}

double WeightedEigenpair::derivative(double radius) const {
    return CubicHermiteView{&r, &phi, &dphi}.derivative(radius);
}

WeightedEigenpair weighted_radial_eigen(const radial::RadialProfile& profile, int i) {
    if (i != 1 && i != 2)
        throw std::invalid_argument("weighted_radial_eigen: only the two negative radial "
                                    "eigenvalues exist (i must be 1 or 2)");

    // Rigorous lower bound: beta_1 >= -max_r p|u(r)|^{p-1} r^2.
    double cap = 0.0;
    for (std::size_t j = 0; j < profile.grid.size(); ++j) {
        const double r = profile.grid[j];
        cap = std::max(cap, profile.p * std::pow(std::abs(profile.u[j]), profile.p - 1.0) * r * r);
    }
    double lo = -(cap + 1.0);
    double hi = -1e-9;

    if (weighted_zero_count(profile, hi) < i)
        throw NoNegativeEigenvalue("weighted_radial_eigen: no sign change for index " +
                                   std::to_string(i) + " in [-C, 0)");
    if (weighted_zero_count(profile, lo) >= i)
        throw NoNegativeEigenvalue("weighted_radial_eigen: lower bound not below beta_1; "
                                   "profile is inconsistent");

    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (weighted_zero_count(profile, mid) >= i)
            hi = mid;
        else
            lo = mid;
    }
    const double beta = 0.5 * (lo + hi);
    const double s = std::sqrt(-beta);

    WeightedEigenpair pair;
    pair.i = i;
    pair.beta = beta;
    pair.decay = s;

    const double r0 = shoot_start(profile);
    auto coef = [&profile, beta](double r) { return -beta / (r * r) - profile.weight(r); };
    Shot sh = shoot(coef, r0, 1.0, s / r0, true);
    double sup = 0.0;
    for (double v : sh.v) sup = std::max(sup, std::abs(v));
    // phi > 0 near the origin: the shot starts positive by construction, but
    // the stored leading values may underflow to zero; the sign is fixed from
    // the first node of nonzero magnitude.
    double sign = 1.0;
    for (double v : sh.v) {
        if (v != 0.0) {
            sign = v > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    for (std::size_t j = 0; j < sh.r.size(); ++j) {
        pair.r.push_back(sh.r[j]);
        pair.phi.push_back(sign * sh.v[j] / sup);
        pair.dphi.push_back(sign * sh.dv[j] / sup);
    }
    return pair;
}

namespace {

// Eigenvalue count below lambda for a symmetric tridiagonal matrix (Sturm
// sequence with the usual small-pivot guard).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double lambda) {
    int count = 0;
    double t = d[0] - lambda;
    if (t < 0.0) ++count;
    for (std::size_t j = 1; j < d.size(); ++j) {
        double denom = t;
        if (std::abs(denom) < 1e-300) denom = denom < 0.0 ? -1e-300 : 1e-300;
        t = d[j] - lambda - e[j - 1] * e[j - 1] / denom;
        if (t < 0.0) ++count;
    }
    return count;
}

double tridiagonal_eigenvalue(const std::vector<double>& d, const std::vector<double>& e, int i) {
    double lo = d[0], hi = d[0];
    for (std::size_t j = 0; j < d.size(); ++j) {
        const double radius = (j > 0 ? std::abs(e[j - 1]) : 0.0) +
                              (j + 1 < d.size() ? std::abs(e[j]) : 0.0);
        lo = std::min(lo, d[j] - radius);
        hi = std::max(hi, d[j] + radius);
    }
    while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) >= i)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

AnnulusApprox annulus_radial_eigen(const radial::RadialProfile& profile, int n, int i) {
    if (n < 2) throw std::invalid_argument("annulus_radial_eigen: n must be >= 2");
    if (i != 1 && i != 2) throw std::invalid_argument("annulus_radial_eigen: i must be 1 or 2");

    // On (1/n, 1) substitute phi = sqrt(r) psi:
    //   -phi'' - (q + 1/(4 r^2)) phi = (beta/r^2) phi,
    // then scale out the diagonal weight to a standard symmetric tridiagonal.
    constexpr int kInterior = 4096;
    const double a = 1.0 / static_cast<double>(n);
    const double h = (1.0 - a) / static_cast<double>(kInterior + 1);

    std::vector<double> diag(kInterior), off(kInterior - 1);
    for (int j = 0; j < kInterior; ++j) {
        const double r = a + h * (j + 1);
        const double q = profile.weight(r);
        diag[j] = (2.0 / (h * h) - q) * r * r - 0.25;
        if (j + 1 < kInterior) {
            const double rn = a + h * (j + 2);
            off[j] = -(r * rn) / (h * h);
        }
    }
    return AnnulusApprox{n, i, tridiagonal_eigenvalue(diag, off, i)};
}

ModeSpectrum mode_spectrum(const radial::RadialProfile& profile, int k, int count) {
    if (k < 0) throw std::invalid_argument("mode_spectrum: k must be >= 0");
    if (count < 1) throw std::invalid_argument("mode_spectrum: count must be >= 1");

    ModeSpectrum spec;
    spec.k = k;

    const double qmax = profile.weight(0.0);
    const double floor_mu = -(qmax + 1.0);

    for (int i = 1; i <= count; ++i) {
        double lo = floor_mu;
        const double nu = specfun::bessel_zero(k, i);
        double hi = nu * nu + 1.0;
        while (mode_zero_count(profile, k, hi) < i) hi = 2.0 * hi + 10.0;
        if (mode_zero_count(profile, k, lo) >= i)
            throw std::runtime_error("mode_spectrum: Rayleigh floor violated");
        while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
            const double mid = 0.5 * (lo + hi);
            if (mode_zero_count(profile, k, mid) >= i)
                hi = mid;
            else
                lo = mid;
        }
        spec.mus.push_back(0.5 * (lo + hi));
    }
    for (double mu : spec.mus)
        if (mu < 0.0) ++spec.count_negative;
    return spec;
}

}  // namespace lanemden::eigen

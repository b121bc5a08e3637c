#pragma once

// Adaptive Dormand-Prince 5(4) integrator with the standard fourth-order
// continuous extension. The dense coefficients of every accepted step are
// retained so that trajectories can be evaluated and root-polished anywhere
// in the integration interval.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "lanemden/errors.hpp"

namespace lanemden {

struct OdeOptions {
    double rtol = 1e-11;
    double atol = 1e-13;
    double initial_step = 1e-4;
    double max_step = std::numeric_limits<double>::infinity();
    long max_steps = 40'000'000;
};

template <int N>
struct DenseSegment {
    double t0 = 0.0;
    double h = 0.0;
    std::array<std::array<double, N>, 5> rcont{};

    void eval(double t, std::array<double, N>& out) const {
        const double theta = (t - t0) / h;
        const double s1 = 1.0 - theta;
        for (int i = 0; i < N; ++i) {
            out[i] = rcont[0][i] +
                     theta * (rcont[1][i] +
                              s1 * (rcont[2][i] + theta * (rcont[3][i] + s1 * rcont[4][i])));
        }
    }

    double eval(double t, int comp) const {
        const double theta = (t - t0) / h;
        const double s1 = 1.0 - theta;
        return rcont[0][comp] +
               theta * (rcont[1][comp] +
                        s1 * (rcont[2][comp] + theta * (rcont[3][comp] + s1 * rcont[4][comp])));
    }
};

template <int N>
struct DenseTrajectory {
    std::vector<double> t;                     // node times, size = segments + 1
    std::vector<std::array<double, N>> y;      // states at nodes
    std::vector<DenseSegment<N>> segments;

    double t_begin() const { return t.front(); }
    double t_end() const { return t.back(); }

    std::size_t segment_index(double tq) const {
        auto it = std::upper_bound(t.begin(), t.end(), tq);
        std::size_t i = (it == t.begin()) ? 0 : static_cast<std::size_t>(it - t.begin() - 1);
        return std::min(i, segments.size() - 1);
    }

    void eval(double tq, std::array<double, N>& out) const {
        segments[segment_index(tq)].eval(tq, out);
    }

    double eval(double tq, int comp) const {
        return segments[segment_index(tq)].eval(tq, comp);
    }
};

namespace detail {

// Dormand-Prince tableau.
inline constexpr double dp_c2 = 1.0 / 5, dp_c3 = 3.0 / 10, dp_c4 = 4.0 / 5, dp_c5 = 8.0 / 9;
inline constexpr double dp_a21 = 1.0 / 5;
inline constexpr double dp_a31 = 3.0 / 40, dp_a32 = 9.0 / 40;
inline constexpr double dp_a41 = 44.0 / 45, dp_a42 = -56.0 / 15, dp_a43 = 32.0 / 9;
inline constexpr double dp_a51 = 19372.0 / 6561, dp_a52 = -25360.0 / 2187,
                        dp_a53 = 64448.0 / 6561, dp_a54 = -212.0 / 729;
inline constexpr double dp_a61 = 9017.0 / 3168, dp_a62 = -355.0 / 33, dp_a63 = 46732.0 / 5247,
                        dp_a64 = 49.0 / 176, dp_a65 = -5103.0 / 18656;
inline constexpr double dp_a71 = 35.0 / 384, dp_a73 = 500.0 / 1113, dp_a74 = 125.0 / 192,
                        dp_a75 = -2187.0 / 6784, dp_a76 = 11.0 / 84;
inline constexpr double dp_e1 = 71.0 / 57600, dp_e3 = -71.0 / 16695, dp_e4 = 71.0 / 1920,
                        dp_e5 = -17253.0 / 339200, dp_e6 = 22.0 / 525, dp_e7 = -1.0 / 40;
inline constexpr double dp_d1 = -12715105075.0 / 11282082432.0;
inline constexpr double dp_d3 = 87487479700.0 / 32700410799.0;
inline constexpr double dp_d4 = -10690763975.0 / 1880347072.0;
inline constexpr double dp_d5 = 701980252875.0 / 199316789632.0;
inline constexpr double dp_d6 = -1453857185.0 / 822651844.0;
inline constexpr double dp_d7 = 69997945.0 / 29380423.0;

}  // namespace detail

// One trial step. k1 must hold f(t, y); on acceptance k7 becomes the next k1.
template <int N, class F>
struct Dopri5 {
    F f;
    OdeOptions opts;

    using State = std::array<double, N>;

    explicit Dopri5(F func, OdeOptions o = {}) : f(std::move(func)), opts(o) {}

    // Integrates from t0 to t1 (t1 > t0). The observer is called after every
    // accepted step with the trajectory built so far; returning false stops
    // the integration (the trajectory stays valid up to the last node).
    DenseTrajectory<N> integrate(double t0, const State& y0, double t1,
                                 const std::function<bool(const DenseTrajectory<N>&)>& observer = {}) const {
        using namespace detail;
        DenseTrajectory<N> traj;
        traj.t.push_back(t0);
        traj.y.push_back(y0);

        State y = y0, k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
        double t = t0;
        f(t, y, k1);
        double h = std::min({opts.initial_step, opts.max_step, t1 - t0});

        long steps = 0;
        while (t < t1) {
            if (++steps > opts.max_steps)
                throw StepFailure("dopri5: step budget exhausted");
            if (!(h > std::abs(t) * 1e-14 + 1e-290))
                throw StepFailure("dopri5: step size underflow at t=" + std::to_string(t));
            if (t + h > t1) h = t1 - t;

            for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * dp_a21 * k1[i];
            f(t + dp_c2 * h, ytmp, k2);
            for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * (dp_a31 * k1[i] + dp_a32 * k2[i]);
            f(t + dp_c3 * h, ytmp, k3);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (dp_a41 * k1[i] + dp_a42 * k2[i] + dp_a43 * k3[i]);
            f(t + dp_c4 * h, ytmp, k4);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (dp_a51 * k1[i] + dp_a52 * k2[i] + dp_a53 * k3[i] +
                                      dp_a54 * k4[i]);
            f(t + dp_c5 * h, ytmp, k5);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (dp_a61 * k1[i] + dp_a62 * k2[i] + dp_a63 * k3[i] +
                                      dp_a64 * k4[i] + dp_a65 * k5[i]);
            f(t + h, ytmp, k6);
            for (int i = 0; i < N; ++i)
                ynew[i] = y[i] + h * (dp_a71 * k1[i] + dp_a73 * k3[i] + dp_a74 * k4[i] +
                                      dp_a75 * k5[i] + dp_a76 * k6[i]);
            f(t + h, ynew, k7);

            double errnorm = 0.0;
            for (int i = 0; i < N; ++i) {
                const double e = h * (dp_e1 * k1[i] + dp_e3 * k3[i] + dp_e4 * k4[i] +
                                      dp_e5 * k5[i] + dp_e6 * k6[i] + dp_e7 * k7[i]);
                const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                errnorm += (e / sc) * (e / sc);
            }
            errnorm = std::sqrt(errnorm / N);

            if (errnorm <= 1.0) {
                DenseSegment<N> seg;
                seg.t0 = t;
                seg.h = h;
                for (int i = 0; i < N; ++i) {
                    const double dy = ynew[i] - y[i];
                    const double bspl = h * k1[i] - dy;
                    seg.rcont[0][i] = y[i];
                    seg.rcont[1][i] = dy;
                    seg.rcont[2][i] = bspl;
                    seg.rcont[3][i] = dy - h * k7[i] - bspl;
                    seg.rcont[4][i] = h * (dp_d1 * k1[i] + dp_d3 * k3[i] + dp_d4 * k4[i] +
                                           dp_d5 * k5[i] + dp_d6 * k6[i] + dp_d7 * k7[i]);
                }
                t += h;
                y = ynew;
                k1 = k7;
                traj.segments.push_back(seg);
                traj.t.push_back(t);
                traj.y.push_back(y);
                if (observer && !observer(traj)) break;
            }

            const double fac = std::clamp(0.9 * std::pow(std::max(errnorm, 1e-30), -0.2), 0.2, 10.0);
            h = std::min(h * fac, opts.max_step);
        }
        return traj;
    }
};

template <int N, class F>
Dopri5<N, std::decay_t<F>> make_dopri5(F&& f, OdeOptions opts = {}) {
    return Dopri5<N, std::decay_t<F>>(std::forward<F>(f), opts);
}

}  // namespace lanemden

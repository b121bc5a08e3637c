#include "lanemden/asym.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lanemden/eigen.hpp"
#include "lanemden/errors.hpp"
#include "lanemden/numerics.hpp"
#include "lanemden/radial.hpp"
#include "lanemden/specfun.hpp"

namespace lanemden::asym {

double compute_ctilde(int quadrature_points) {
    if (quadrature_points < 256)
        throw std::invalid_argument("compute_ctilde: need at least 256 quadrature points");
    const double nu = specfun::bessel_zero(0, 2);
    const double zero_circle = specfun::bessel_zero(0, 1) / nu;

    auto numerator_f = [nu](double r) {
        const double v = specfun::bessel_j(0, nu * r);
        if (v == 0.0) return 0.0;  // t^2 log|t| -> 0
        return r * v * v * std::log(std::abs(v));
    };
    auto denominator_f = [nu](double r) {
        const double v = specfun::bessel_j(0, nu * r);
        return r * v * v;
    };

    // Panel the interval through the interior zero circle (where the
    // integrand loses smoothness) and refine adaptively inside each panel.
    const int panels = quadrature_points;
    const double split[3] = {0.0, zero_circle, 1.0};
    double num = 0.0, den = 0.0;
    for (int s = 0; s < 2; ++s) {
        const double a = split[s], b = split[s + 1];
        const int sub = std::max(2, panels / 2);
        for (int i = 0; i < sub; ++i) {
            const double x0 = a + (b - a) * i / sub;
            const double x1 = a + (b - a) * (i + 1) / sub;
            num += adaptive_simpson(numerator_f, x0, x1, 1e-12);
            den += adaptive_simpson(denominator_f, x0, x1, 1e-13);
        }
    }
    return num / den;
}

NearOneReport validate_near_one(const std::vector<double>& p_sequence) {
    if (p_sequence.empty()) throw std::invalid_argument("validate_near_one: empty sequence");
    for (double p : p_sequence)
        if (!(p > 1.0 && p <= 1.2))
            throw std::invalid_argument("validate_near_one: p must lie in (1, 1.2]");

    const double nu = specfun::bessel_zero(0, 2);
    const double lambda = nu * nu;

    NearOneReport rep;
    rep.p_values = p_sequence;
    rep.c_tilde = compute_ctilde(1024);

    for (double p : p_sequence) {
        const auto prof = radial::solve_radial(p, 2);
        double sup = 0.0;
        constexpr int kSamples = 2000;
        for (int i = 0; i <= kSamples; ++i) {
            const double r = static_cast<double>(i) / kSamples;
            const double diff = prof.value(r) / prof.alpha - specfun::bessel_j(0, nu * r);
            sup = std::max(sup, std::abs(diff));
        }
        rep.sup_errors.push_back(sup);
        rep.alpha_powers.push_back(std::pow(prof.alpha, p - 1.0));
    }

    // Least squares of alpha^{p-1} against (p-1).
    const std::size_t n = p_sequence.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = p_sequence[i] - 1.0, y = rep.alpha_powers[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    rep.fitted_slope = (n * sxy - sx * sy) / denom;
    rep.fitted_intercept = (sy - rep.fitted_slope * sx) / n;

    const double predicted_slope = -lambda * rep.c_tilde;
    rep.slope_rel_error = std::abs(rep.fitted_slope - predicted_slope) / std::abs(predicted_slope);

    // Per-point fit residuals; the point closest to p = 1 carries the largest
    // relative round-off amplification and is excluded from the report.
    double smallest_x = p_sequence[0] - 1.0;
    for (double p : p_sequence) smallest_x = std::min(smallest_x, p - 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = p_sequence[i] - 1.0;
        if (x == smallest_x) continue;
        const double res = std::abs(rep.alpha_powers[i] -
                                    (rep.fitted_intercept + rep.fitted_slope * x));
        rep.max_fit_residual = std::max(rep.max_fit_residual, res);
    }
    return rep;
}

LargePReport validate_large_p(const std::vector<double>& p_sequence) {
    if (p_sequence.empty()) throw std::invalid_argument("validate_large_p: empty sequence");

    LargePReport rep;
    for (double p : p_sequence) {
        try {
            const auto prof = radial::solve_radial(p, 2);
            const auto pair1 = eigen::weighted_radial_eigen(prof, 1);
            rep.p_values.push_back(p);
            rep.ell_estimates.push_back(prof.s_p / prof.eps_minus);
            rep.beta1_values.push_back(pair1.beta);
        } catch (const std::exception&) {
            break;  // stable horizon reached
        }
    }
    if (rep.p_values.empty())
        throw ProfileFailure("validate_large_p: no point of the sequence was solvable");

    rep.reached_target = rep.p_values.size() == p_sequence.size();
    rep.gap_at_max_p = std::abs(rep.beta1_values.back() - kBeta1Limit);
    const double b1 = rep.beta1_values.back();
    rep.ell_from_beta1 = (b1 < -1.0) ? std::sqrt(-2.0 * b1 - 2.0) : 0.0;

    rep.monotone_trend = true;
    for (std::size_t i = 1; i < rep.beta1_values.size(); ++i) {
        const double prev_gap = std::abs(rep.beta1_values[i - 1] - kBeta1Limit);
        const double gap = std::abs(rep.beta1_values[i] - kBeta1Limit);
        if (gap > prev_gap + 1e-3 * (1.0 + prev_gap)) rep.monotone_trend = false;
    }
    return rep;
}

}  // namespace lanemden::asym

#include "lanemden/scan.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lanemden/eigen.hpp"
#include "lanemden/errors.hpp"

namespace lanemden::scan {

namespace {

double beta1_at(double p) {
    try {
        const auto prof = radial::solve_radial(p, 2);
        return eigen::weighted_radial_eigen(prof, 1).beta;
    } catch (const StepFailure& e) {
        throw ProfileFailure("beta1 sweep failed at p=" + std::to_string(p) + ": " + e.what());
    } catch (const NotBracketed& e) {
        throw ProfileFailure("beta1 sweep failed at p=" + std::to_string(p) + ": " + e.what());
    }
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

double beta1_level(double p, int j) {
    return beta1_at(p) + static_cast<double>(j) * j;
}

std::vector<CurvePoint> sweep_beta(double p_lo, double p_hi, int grid_count, int threads) {
    if (!(1.0 < p_lo && p_lo < p_hi))
        throw std::invalid_argument("sweep_beta: need 1 < p_lo < p_hi");
    if (grid_count < 2) throw std::invalid_argument("sweep_beta: grid_count must be >= 2");

    std::vector<CurvePoint> curve(grid_count);
    const double ratio = (p_hi - 1.0) / (p_lo - 1.0);
    for (int i = 0; i < grid_count; ++i) {
        const double frac = static_cast<double>(i) / (grid_count - 1);
        curve[i].p = 1.0 + (p_lo - 1.0) * std::pow(ratio, frac);
    }

    unsigned nworkers = threads > 0 ? static_cast<unsigned>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
    nworkers = std::min<unsigned>(nworkers, static_cast<unsigned>(grid_count));

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= grid_count) return;
            try {
                const auto prof = radial::solve_radial(curve[i].p, 2);
                curve[i].beta1 = eigen::weighted_radial_eigen(prof, 1).beta;
                curve[i].beta2 = eigen::weighted_radial_eigen(prof, 2).beta;
                curve[i].ok = true;
            } catch (const std::exception&) {
                curve[i].ok = false;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nworkers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& cp : curve)
        if (!cp.ok)
            throw ProfileFailure("sweep_beta: solver failed at p=" + std::to_string(cp.p) +
                                 " (window too aggressive)");
    return curve;
}

DegenerateExponent refine_crossing(int j, double p_lo, double p_hi) {
    const double level = static_cast<double>(j) * j;
    double glo = beta1_at(p_lo) + level;
    double ghi = beta1_at(p_hi) + level;
    if (sign_of(glo) * sign_of(ghi) >= 0)
        throw LostBracket("refine_crossing: endpoints share a sign for j=" + std::to_string(j));

    const int dir = glo < 0.0 ? +1 : -1;
    while (p_hi - p_lo > 1e-6) {
        const double mid = 0.5 * (p_lo + p_hi);
        const double gmid = beta1_at(mid) + level;
        if (gmid == 0.0) {
            p_lo = mid - 2.5e-7;
            p_hi = mid + 2.5e-7;
            break;
        }
        if (sign_of(gmid) == sign_of(glo)) {
            p_lo = mid;
            glo = gmid;
        } else {
            p_hi = mid;
            ghi = gmid;
        }
    }

    DegenerateExponent de;
    de.j = j;
    de.p_lo = p_lo;
    de.p_hi = p_hi;
    de.p_star = 0.5 * (p_lo + p_hi);
    de.direction = dir;
    de.residual = std::abs(beta1_at(de.p_star) + level);
    return de;
}

std::vector<DegenerateExponent> crossings_from_curve(const std::vector<CurvePoint>& curve, int j,
                                                     double touch_tol) {
    const double level = static_cast<double>(j) * j;
    std::vector<DegenerateExponent> out;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const double ga = curve[i].beta1 + level;
        const double gb = curve[i + 1].beta1 + level;
        if (ga * gb < 0.0) {
            out.push_back(refine_crossing(j, curve[i].p, curve[i + 1].p));
        } else if (std::abs(ga) < touch_tol && i > 0 &&
                   (curve[i - 1].beta1 + level) * gb > 0.0) {
            // Grid point essentially on the level without a sign change:
            // tangential touch, excluded from the crossing set.
            DegenerateExponent de;
            de.j = j;
            de.p_star = curve[i].p;
            de.p_lo = curve[i - 1].p;
            de.p_hi = curve[i + 1].p;
            de.direction = 0;
            de.residual = std::abs(ga);
            out.push_back(de);
        }
    }
    return out;
}

std::vector<DegenerateExponent> scan_degenerate(int j, double p_lo, double p_hi, int grid_count,
                                                int threads) {
    if (grid_count < 16) throw std::invalid_argument("scan_degenerate: grid_count must be >= 16");
    const auto curve = sweep_beta(p_lo, p_hi, grid_count, threads);
    return crossings_from_curve(curve, j);
}

std::vector<DegenerateExponent> scan_secondary(double p_lo, double p_hi, int grid_count,
                                               int threads) {
    const auto curve = sweep_beta(p_lo, p_hi, grid_count, threads);
    std::vector<DegenerateExponent> out;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const double ga = curve[i].beta2 + 1.0;
        const double gb = curve[i + 1].beta2 + 1.0;
        if (ga * gb < 0.0) {
            // Bisect on beta2 + 1 directly.
            double lo = curve[i].p, hi = curve[i + 1].p;
            double glo = ga;
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                const auto prof = radial::solve_radial(mid, 2);
                const double g = eigen::weighted_radial_eigen(prof, 2).beta + 1.0;
                if (sign_of(g) == sign_of(glo)) {
                    lo = mid;
                    glo = g;
                } else {
                    hi = mid;
                }
            }
            DegenerateExponent de;
            de.j = 1;
            de.p_lo = lo;
            de.p_hi = hi;
            de.p_star = 0.5 * (lo + hi);
            de.direction = ga < 0.0 ? +1 : -1;
            const auto prof = radial::solve_radial(de.p_star, 2);
            de.residual = std::abs(eigen::weighted_radial_eigen(prof, 2).beta + 1.0);
            out.push_back(de);
        }
    }
    return out;
}

}  // namespace lanemden::scan

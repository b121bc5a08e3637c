#include "lanemden/morse.hpp"

#include <cmath>
#include <stdexcept>

#include "lanemden/errors.hpp"
#include "lanemden/interp.hpp"
#include "lanemden/numerics.hpp"

namespace lanemden::morse {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

int KernelDescription::dimension_in_symmetric(int k) const {
    if (k < 2) throw std::invalid_argument("dimension_in_symmetric: k must be >= 2");
    return (beta1_critical && j % k == 0) ? 1 : 0;
}

std::string KernelDescription::describe() const {
    if (!degenerate) return "empty";
    const std::string pair1 =
        "span{phi1 cos(" + std::to_string(j) + "t), phi1 sin(" + std::to_string(j) + "t)}";
    const std::string pair2 = "span{phi2 cos(t), phi2 sin(t)}";
    if (beta1_critical && beta2_critical) return pair1 + " + " + pair2;
    return beta1_critical ? pair1 : pair2;
}

KernelDescription classify_degeneracy(double beta1, double beta2, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify_degeneracy: tol must be positive");
    KernelDescription kd;
    kd.j = static_cast<int>(std::lround(std::sqrt(-beta1)));
    kd.beta1_critical = std::abs(beta1 + static_cast<double>(kd.j) * kd.j) < tol && kd.j >= 2;
    kd.beta2_critical = std::abs(beta2 + 1.0) < tol;
    kd.degenerate = kd.beta1_critical || kd.beta2_critical;
    kd.dimension = (kd.beta1_critical ? 2 : 0) + (kd.beta2_critical ? 2 : 0);
    return kd;
}

MorseReport assemble_morse(double beta1, double beta2, int K, double p, double degeneracy_tol) {
    if (!(beta1 < beta2 && beta2 < 0.0))
        throw InvalidOrdering("assemble_morse: need beta1 < beta2 < 0");

    MorseReport rep;
    rep.p = p;
    rep.beta1 = beta1;
    rep.beta2 = beta2;

    rep.j = static_cast<int>(std::ceil(std::sqrt(-beta1)));
    if (!(-static_cast<double>(rep.j) * rep.j <= beta1 &&
          beta1 < -static_cast<double>(rep.j - 1) * (rep.j - 1)))
        throw std::logic_error("assemble_morse: j bracket failed");
    if (rep.j < 2) throw std::logic_error("assemble_morse: j must be >= 2 (beta1 < -1 required)");

    int neg1 = 0, neg2 = 0;  // angular modes k >= 1 contributing per radial index
    const int kmax = std::max(K, rep.j + 1);
    for (int k = 0; k <= kmax; ++k) {
        const double v1 = beta1 + static_cast<double>(k) * k;
        const double v2 = beta2 + static_cast<double>(k) * k;
        rep.decomposition.push_back({k, 1, v1, k == 0 ? 1 : 2});
        rep.decomposition.push_back({k, 2, v2, k == 0 ? 1 : 2});
        if (k >= 1 && v1 < 0.0) ++neg1;
        if (k >= 1 && v2 < 0.0) ++neg2;
    }
    rep.m_full = 1 + 1 + 2 * neg1 + 2 * neg2;

    for (int k = 1; k <= K; ++k) {
        int mk = 2;  // both radial eigenfunctions are k-symmetric
        for (int q = k; q <= kmax; q += k) {
            if (beta1 + static_cast<double>(q) * q < 0.0) ++mk;
            if (beta2 + static_cast<double>(q) * q < 0.0) ++mk;
        }
        rep.m_k.push_back(mk);
    }

    rep.kernel = classify_degeneracy(beta1, beta2, degeneracy_tol);
    rep.degenerate = rep.kernel.degenerate;
    return rep;
}

double quadratic_form(const radial::RadialProfile& profile,
                      const std::vector<RadialModeFunction>& modes) {
    double total = 0.0;
    for (const auto& mode : modes) {
        if (mode.r.size() < 2) continue;
        CubicHermiteView c{&mode.r, &mode.value, &mode.deriv};
        const double k2 = static_cast<double>(mode.k) * mode.k;
        auto integrand = [&](double r) {
            const double v = c.value(r);
            const double dv = c.derivative(r);
            double grad = dv * dv;
            if (mode.k > 0) grad += k2 * v * v / (r * r);
            return (grad - profile.weight(r) * v * v) * r;
        };
        const double a = std::max(mode.r.front(), 1e-9);
        const double angular = (mode.k == 0) ? 2.0 * kPi : kPi;
        total += angular * adaptive_simpson(integrand, a, 1.0, 1e-11);
    }
    return total;
}

}  // namespace lanemden::morse

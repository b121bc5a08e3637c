#include "lanemden/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lanemden/numerics.hpp"

namespace lanemden::specfun {

namespace {

constexpr double kSeriesSeam = 12.0;
constexpr double kPi = 3.14159265358979323846;

double bessel_j_series(int n, double x) {
    // J_n(x) = (x/2)^n/n! * sum_m (-1)^m (x^2/4)^m / (m! (n+m)!)
    double prefactor = 1.0;
    const double half = 0.5 * x;
    for (int i = 1; i <= n; ++i) prefactor *= half / static_cast<double>(i);
    if (prefactor == 0.0) return 0.0;  // underflow: |J_n| below double range
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 600; ++m) {
        term *= q / (static_cast<double>(m) * static_cast<double>(m + n));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return prefactor * sum;
}

double bessel_j_miller(int n, double x) {
    // Backward recurrence J_{m-1} = (2m/x) J_m - J_{m+1}, normalized with
    // J_0 + 2 J_2 + 2 J_4 + ... = 1.
    const double big = std::max(static_cast<double>(n), x);
    const long start = static_cast<long>(big + 16.0 + 12.0 * std::sqrt(big));
    double jp = 0.0;          // J_{m+1}
    double jc = 1e-30;        // J_m (arbitrary scale)
    double acc_even = 0.0;    // sum of J_m over even m > 0
    double jn = (n == static_cast<int>(start)) ? jc : 0.0;
    for (long m = start; m >= 1; --m) {
        double jm = (2.0 * static_cast<double>(m) / x) * jc - jp;
        jp = jc;
        jc = jm;
        if ((m - 1) % 2 == 0 && m - 1 > 0) acc_even += jc;
        if (m - 1 == n) jn = jc;
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            jn *= 1e-250;
            acc_even *= 1e-250;
        }
    }
    const double norm = jc + 2.0 * acc_even;  // jc now holds J_0 scale
    return jn / norm;
}

}  // namespace

double bessel_j(int n, double x) {
    if (n < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
    if (x < 0.0) throw std::invalid_argument("bessel_j: argument must be >= 0");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= kSeriesSeam) return bessel_j_series(n, x);
    return bessel_j_miller(n, x);
}

double bessel_zero(int n, int k) {
    if (k < 1) throw std::invalid_argument("bessel_zero: k must be >= 1");
    // Zeros of J_n exceed n; scanning by pi/4 isolates consecutive roots
    // (neighboring zeros of J_n are more than pi apart near the axis).
    const double step = kPi / 4.0;
    double a = static_cast<double>(n);
    double fa = bessel_j(n, a);
    if (fa == 0.0 && n > 0) {  // J_n(n) cannot vanish, but guard the scan start
        a += 1e-8;
        fa = bessel_j(n, a);
    }
    int found = 0;
    for (long i = 0; i < 4'000'000; ++i) {
        const double b = a + step;
        const double fb = bessel_j(n, b);
        if (fa * fb < 0.0) {
            ++found;
            if (found == k) {
                return brent_root([n](double x) { return bessel_j(n, x); }, a, b, 1e-14);
            }
        }
        a = b;
        fa = fb;
    }
    throw std::runtime_error("bessel_zero: scan failed to reach the requested zero");
}

int DiskEigenstructure::count_below(double lambda) const {
    int c = 0;
    for (const auto& e : entries)
        if (e.lambda < lambda) c += e.multiplicity;
    return c;
}

DiskEigenstructure disk_eigenstructure(int count) {
    if (count < 1 || count > 200)
        throw std::invalid_argument("disk_eigenstructure: count must be in [1, 200]");
    // Weyl bound with margin: N(lambda) ~ lambda/4 - sqrt(lambda)/2 on the disk.
    const double c = static_cast<double>(count);
    const double bound = 4.0 * c + 8.0 * std::sqrt(4.0 * c) + 80.0;

    std::vector<DiskEigenmode> pool;
    for (int n = 0; static_cast<double>(n) * n < bound; ++n) {
        for (int k = 1;; ++k) {
            const double nu = bessel_zero(n, k);
            const double lambda = nu * nu;
            if (lambda > bound) break;
            pool.push_back({n, k, nu, lambda, n == 0 ? 1 : 2});
        }
    }
    std::sort(pool.begin(), pool.end(),
              [](const DiskEigenmode& a, const DiskEigenmode& b) { return a.lambda < b.lambda; });

    DiskEigenstructure out;
    int cum = 0;
    for (const auto& e : pool) {
        out.entries.push_back(e);
        cum += e.multiplicity;
        if (cum >= count) break;
    }
    if (cum < count)
        throw std::runtime_error("disk_eigenstructure: internal bound too small");
    return out;
}

double lambda_2_rad() {
    const double nu = bessel_zero(0, 2);
    return nu * nu;
}

}  // namespace lanemden::specfun

#pragma once

// Cubic Hermite interpolation over a strictly increasing node set with stored
// values and derivatives. Non-owning view; nodes must outlive the view.

#include <algorithm>
#include <cmath>
#include <vector>

namespace lanemden {

struct CubicHermiteView {
    const std::vector<double>* x = nullptr;
    const std::vector<double>* y = nullptr;
    const std::vector<double>* dy = nullptr;

    std::size_t cell(double q) const {
        auto it = std::upper_bound(x->begin(), x->end(), q);
        std::size_t i = (it == x->begin()) ? 0 : static_cast<std::size_t>(it - x->begin() - 1);
        return std::min(i, x->size() - 2);
    }

    double value(double q) const {
        if (q <= x->front()) return y->front();
        if (q >= x->back()) return y->back();
        const std::size_t i = cell(q);
        const double h = (*x)[i + 1] - (*x)[i];
        const double t = (q - (*x)[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * (*y)[i] + (t3 - 2 * t2 + t) * h * (*dy)[i] +
               (-2 * t3 + 3 * t2) * (*y)[i + 1] + (t3 - t2) * h * (*dy)[i + 1];
    }

    double derivative(double q) const {
        if (q <= x->front()) return dy->front();
        if (q >= x->back()) return dy->back();
        const std::size_t i = cell(q);
        const double h = (*x)[i + 1] - (*x)[i];
        const double t = (q - (*x)[i]) / h;
        const double t2 = t * t;
        return ((6 * t2 - 6 * t) * (*y)[i] + (3 * t2 - 4 * t + 1) * h * (*dy)[i] +
                (-6 * t2 + 6 * t) * (*y)[i + 1] + (3 * t2 - 2 * t) * h * (*dy)[i + 1]) / h;
    }
};

}  // namespace lanemden

// Test-only numerical oracles, implemented independently of the library
// internals so they can cross-check the closed-form code paths.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

// 5-point central finite difference with one step of Richardson extrapolation.
inline double deriv(const std::function<double(double)>& f, double x, int order = 1) {
    auto fd = [&](double h) {
        if (order == 1)
            return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
        return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
               (12 * h * h);
    };
    const double h = order == 1 ? std::max(1e-4, std::abs(x) * 1e-4)
                                : std::max(1e-3, std::abs(x) * 1e-2);
    const double d1 = fd(h);
    const double d2 = fd(h / 2);
    return (16.0 * d2 - d1) / 15.0;
}

// Plain midpoint bisection; requires a sign change on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double xtol = 1e-13) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw std::runtime_error("oracle::bisect: no sign change");
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Count strict sign changes of f over an n-point grid on [lo, hi].
inline int sign_changes(const std::function<double(double)>& f, double lo, double hi, int n) {
    int count = 0;
    double prev = f(lo);
    for (int i = 1; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double v = f(x);
        if ((prev > 0 && v < 0) || (prev < 0 && v > 0)) ++count;
        if (v != 0.0) prev = v;
    }
    return count;
}

// All sign-change brackets refined by bisection.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                                      double hi, int n, double xtol = 1e-12) {
    std::vector<double> roots;
    double xprev = lo, fprev = f(lo);
    for (int i = 1; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double v = f(x);
        if ((fprev > 0 && v < 0) || (fprev < 0 && v > 0)) roots.push_back(bisect(f, xprev, x, xtol));
        xprev = x;
        if (v != 0.0) fprev = v;
    }
    return roots;
}

// Log-log slope of e(a) between the first and last sample.
inline double loglog_slope(const std::vector<double>& a, const std::vector<double>& e) {
    return std::log(e.front() / e.back()) / std::log(a.front() / a.back());
}

} // namespace oracle

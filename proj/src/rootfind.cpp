#include "rootfind.hpp"

#include <cmath>

#include "types.hpp"

namespace whitham {

double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw NumericalError("bisect: endpoints do not bracket a sign change");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= xtol || mid == lo || mid == hi) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                               double hi, int n, double xtol) {
    std::vector<double> roots;
    const double h = (hi - lo) / (n - 1);
    double xprev = lo;
    double fprev = f(xprev);
    for (int i = 1; i < n; ++i) {
        const double x = lo + i * h;
        const double fx = f(x);
        if (fprev == 0.0) {
            roots.push_back(xprev);
        } else if (fx != 0.0 && std::signbit(fprev) != std::signbit(fx)) {
            roots.push_back(bisect(f, xprev, x, xtol));
        }
        xprev = x;
        fprev = fx;
    }
    if (fprev == 0.0) roots.push_back(xprev);
    return roots;
}

} // namespace whitham

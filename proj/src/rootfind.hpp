#pragma once

#include <functional>
#include <vector>

namespace whitham {

// Bisect f on [lo, hi]; requires f(lo) f(hi) <= 0. Converges to a sign change
// within xtol (absolute) in the abscissa.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol = 1e-13);

// Scan f on an n-point grid over [lo, hi] and bisect every bracketed sign
// change. Exact zeros on grid nodes are returned as roots directly.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                               double hi, int n, double xtol = 1e-13);

} // namespace whitham

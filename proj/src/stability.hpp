#pragma once

#include <utility>
#include <vector>

#include "dispersion.hpp"
#include "types.hpp"

namespace whitham {

// Index-evaluation tolerances.
constexpr double kBoundaryTol = 1e-10;      // verdict band around Delta_MI = 0
constexpr double kSecondHarmonicTol = 1e-10;  // |m(z)-m(2z)| proximity guard

struct IndexReport {
    double z = 0.0;
    double delta_bf = 0.0;
    double delta_mi = 0.0;
    double factor_group_curvature = 0.0;   // (z m(z))''
    double factor_longshort = 0.0;         // (z m(z))' - m(0)
    double factor_second_harmonic = 0.0;   // m(z) - m(2z)
    Verdict verdict = Verdict::Boundary;
    Mechanism boundary_mechanism = Mechanism::BFResonancePlus;  // set when verdict == Boundary
    bool second_harmonic_resonant = false;  // delta_mi not evaluated
};

// Benjamin-Feir factor Delta_BF(z) = 2(m(z) - m(2z)) + ((z m(z))' - m(0)).
double delta_bf(const DispersionModel& model, double z);

// Full index Delta_MI with its factor breakdown and a verdict. Waves are
// modulationally unstable where Delta_MI < 0.
IndexReport delta_mi(const DispersionModel& model, double z);

// Sign-scan the four mechanism functions on an n_grid-point grid over
// (z_lo, z_hi) and bisect every bracketed root; the union is the candidate
// set of Delta_MI sign changes.
std::vector<std::pair<double, Mechanism>> critical_wavenumbers(const DispersionModel& model,
                                                               double z_lo, double z_hi,
                                                               int n_grid);

// Wilton-ripple residual tau z^2 - tanh^2(z)/(3 - tanh^2(z)); vanishes
// exactly where m(z) = m(2z).
double wilton_condition(const DispersionModel& model, double z);

struct CriticalCurvePoint {
    double varpi;
    double z_c;
    bool unbounded;  // no sign change found below the search cap
};

// The critical wave number z_c(varpi) where Delta_BF changes sign, per
// vorticity sample. Search starts on (0, z_max) and extends adaptively.
std::vector<CriticalCurvePoint> vorticity_critical_curve(Branch branch,
                                                         const std::vector<double>& varpi_samples,
                                                         double z_max = 200.0);

struct DeepWaterBand {
    double lower;  // in s = tau z^2
    double upper;
};

// Stable band endpoints in s = tau z^2 at a fixed deep-water proxy z.
DeepWaterBand deep_water_band(double z = 50.0, double s_lo = 0.01, double s_hi = 1.0);

} // namespace whitham

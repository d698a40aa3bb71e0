#pragma once

#include "types.hpp"

namespace whitham {

// Nondimensional dispersion model: internally g = d = 1, lengths in units of
// the undisturbed depth d and speeds in units of sqrt(g d).
struct DispersionModel {
    Family family = Family::Gravity;
    double tau = 0.0;    // T/(g d^2), capillary-gravity only
    double varpi = 0.0;  // gamma*sqrt(d/g), constant-vorticity only
    Branch branch = Branch::Plus;

    static DispersionModel gravity();
    static DispersionModel capillary_gravity(double tau);
    static DispersionModel constant_vorticity(double varpi, Branch branch = Branch::Plus);

    // tau within 1e-9 of 1/3: index machinery is inconclusive.
    bool degenerate() const;
};

struct DimensionalParams {
    double g;      // m s^-2
    double d;      // m
    double T;      // surface tension per unit density
    double gamma;  // s^-1
};

struct NondimResult {
    DispersionModel model;
    double speed_scale;   // sqrt(g d)
    double length_scale;  // d
};

NondimResult nondimensionalize(const DimensionalParams& p, Family family,
                               Branch branch = Branch::Plus);

// Phase-speed symbol m(z), z = kd >= 0. The removable singularity at z = 0
// is resolved by series evaluation.
double symbol(const DispersionModel& model, double z);

// m'(z) (order 1) or m''(z) (order 2), closed form with series near z = 0.
double symbol_deriv(const DispersionModel& model, double z, int order);

// Group velocity (z m(z))' and its derivative (z m(z))''.
double group_velocity(const DispersionModel& model, double z);
double group_velocity_deriv(const DispersionModel& model, double z);

struct KdvCoeffs {
    double c0;                // m(0)
    double dispersion_coeff;  // (1/3 - tau)/2
};

// Long-wave expansion m(z) = c0 (1 - dispersion_coeff z^2) + O(z^4).
// Gravity / capillary-gravity only.
KdvCoeffs longwave_kdv_coeffs(const DispersionModel& model);

namespace detail {

// tanh(z)/z and its first two derivatives; closed form away from 0.
double tanh_over_z(double z);
double tanh_over_z_d1(double z);
double tanh_over_z_d2(double z);

// Maclaurin evaluations, valid for small |z|; exposed for cross-checks.
double tanh_over_z_series(double z);
double tanh_over_z_d1_series(double z);
double tanh_over_z_d2_series(double z);
double symbol_series(const DispersionModel& model, double z);

} // namespace detail

} // namespace whitham

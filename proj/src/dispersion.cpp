#include "dispersion.hpp"

#include <cmath>

namespace whitham {

namespace {

// Below this the closed forms for tanh(z)/z and its derivatives lose digits
// to cancellation; switch to Maclaurin series.
constexpr double kSeriesThreshold = 1e-4;
constexpr double kDegenerateTol = 1e-9;

} // namespace

DispersionModel DispersionModel::gravity() {
    return DispersionModel{Family::Gravity, 0.0, 0.0, Branch::Plus};
}

DispersionModel DispersionModel::capillary_gravity(double tau) {
    if (tau < 0.0) throw DomainError("surface tension tau must be nonnegative");
    return DispersionModel{Family::CapillaryGravity, tau, 0.0, Branch::Plus};
}

DispersionModel DispersionModel::constant_vorticity(double varpi, Branch branch) {
    return DispersionModel{Family::ConstantVorticity, 0.0, varpi, branch};
}

bool DispersionModel::degenerate() const {
    return family == Family::CapillaryGravity && std::abs(tau - 1.0 / 3.0) <= kDegenerateTol;
}

NondimResult nondimensionalize(const DimensionalParams& p, Family family, Branch branch) {
    if (p.g <= 0.0) throw DomainError("gravitational acceleration g must be positive");
    if (p.d <= 0.0) throw DomainError("fluid depth d must be positive");
    if (p.T < 0.0) throw DomainError("surface tension T must be nonnegative");

    NondimResult r;
    r.speed_scale = std::sqrt(p.g * p.d);
    r.length_scale = p.d;
    switch (family) {
    case Family::Gravity:
        r.model = DispersionModel::gravity();
        break;
    case Family::CapillaryGravity:
        r.model = DispersionModel::capillary_gravity(p.T / (p.g * p.d * p.d));
        break;
    case Family::ConstantVorticity:
        r.model = DispersionModel::constant_vorticity(p.gamma * std::sqrt(p.d / p.g), branch);
        break;
    }
    return r;
}

namespace detail {

double tanh_over_z_series(double z) {
    const double z2 = z * z;
    return 1.0 + z2 * (-1.0 / 3.0 + z2 * (2.0 / 15.0 - z2 * (17.0 / 315.0)));
}

double tanh_over_z_d1_series(double z) {
    const double z2 = z * z;
    return z * (-2.0 / 3.0 + z2 * (8.0 / 15.0 - z2 * (34.0 / 105.0)));
}

double tanh_over_z_d2_series(double z) {
    const double z2 = z * z;
    return -2.0 / 3.0 + z2 * (8.0 / 5.0 - z2 * (34.0 / 21.0));
}

double tanh_over_z(double z) {
    if (std::abs(z) < kSeriesThreshold) return tanh_over_z_series(z);
    return std::tanh(z) / z;
}

double tanh_over_z_d1(double z) {
    if (std::abs(z) < kSeriesThreshold) return tanh_over_z_d1_series(z);
    const double t = std::tanh(z);
    const double sech2 = 1.0 - t * t;
    return sech2 / z - t / (z * z);
}

double tanh_over_z_d2(double z) {
    if (std::abs(z) < kSeriesThreshold) return tanh_over_z_d2_series(z);
    const double t = std::tanh(z);
    const double sech2 = 1.0 - t * t;
    return -2.0 * sech2 * t / z - 2.0 * sech2 / (z * z) + 2.0 * t / (z * z * z);
}

} // namespace detail

namespace {

using detail::tanh_over_z;
using detail::tanh_over_z_d1;
using detail::tanh_over_z_d2;

// m, m', m'' for the capillary-gravity symbol m = sqrt((1 + tau z^2) s),
// s = tanh(z)/z.
void eval_capillary(double tau, double z, double* m, double* m1, double* m2) {
    const double s = tanh_over_z(z);
    const double f = (1.0 + tau * z * z) * s;
    const double mm = std::sqrt(f);
    if (m) *m = mm;
    if (!m1 && !m2) return;
    const double s1 = tanh_over_z_d1(z);
    const double f1 = 2.0 * tau * z * s + (1.0 + tau * z * z) * s1;
    if (m1) *m1 = f1 / (2.0 * mm);
    if (m2) {
        const double s2 = tanh_over_z_d2(z);
        const double f2 = 2.0 * tau * s + 4.0 * tau * z * s1 + (1.0 + tau * z * z) * s2;
        *m2 = f2 / (2.0 * mm) - f1 * f1 / (4.0 * mm * mm * mm);
    }
}

// m, m', m'' for the constant-vorticity symbol
// m = varpi s / 2 + sqrt(s + varpi^2 s^2 / 4).
// The minus sign choice describes left-moving waves; after the reflection
// x -> -x, u -> -u it coincides with the plus choice at opposite vorticity,
// so callers pass the reflected varpi instead of a sign.
void eval_vorticity(double varpi, double z, double* m, double* m1, double* m2) {
    const double s = tanh_over_z(z);
    const double q = s + varpi * varpi * s * s / 4.0;
    const double rq = std::sqrt(q);
    if (m) *m = varpi * s / 2.0 + rq;
    if (!m1 && !m2) return;
    const double s1 = tanh_over_z_d1(z);
    const double q1 = s1 * (1.0 + varpi * varpi * s / 2.0);
    if (m1) *m1 = varpi * s1 / 2.0 + q1 / (2.0 * rq);
    if (m2) {
        const double s2 = tanh_over_z_d2(z);
        const double q2 = s2 * (1.0 + varpi * varpi * s / 2.0) + varpi * varpi * s1 * s1 / 2.0;
        *m2 = varpi * s2 / 2.0 + q2 / (2.0 * rq) - q1 * q1 / (4.0 * q * rq);
    }
}

void eval_symbol(const DispersionModel& model, double z, double* m, double* m1, double* m2) {
    switch (model.family) {
    case Family::Gravity:
        eval_capillary(0.0, z, m, m1, m2);
        break;
    case Family::CapillaryGravity:
        eval_capillary(model.tau, z, m, m1, m2);
        break;
    case Family::ConstantVorticity:
        eval_vorticity(model.branch == Branch::Plus ? model.varpi : -model.varpi, z, m, m1, m2);
        break;
    }
}

} // namespace

double symbol(const DispersionModel& model, double z) {
    if (z < 0.0) throw DomainError("symbol: z must be nonnegative (even extension is the caller's)");
    double m;
    eval_symbol(model, z, &m, nullptr, nullptr);
    return m;
}

double symbol_deriv(const DispersionModel& model, double z, int order) {
    if (z < 0.0) throw DomainError("symbol_deriv: z must be nonnegative");
    if (order != 1 && order != 2) throw DomainError("symbol_deriv: order must be 1 or 2");
    double d;
    if (order == 1)
        eval_symbol(model, z, nullptr, &d, nullptr);
    else
        eval_symbol(model, z, nullptr, nullptr, &d);
    return d;
}

double group_velocity(const DispersionModel& model, double z) {
    if (z < 0.0) throw DomainError("group_velocity: z must be nonnegative");
    double m, m1;
    eval_symbol(model, z, &m, &m1, nullptr);
    return m + z * m1;
}

double group_velocity_deriv(const DispersionModel& model, double z) {
    if (z < 0.0) throw DomainError("group_velocity_deriv: z must be nonnegative");
    double m1, m2;
    eval_symbol(model, z, nullptr, &m1, &m2);
    return 2.0 * m1 + z * m2;
}

KdvCoeffs longwave_kdv_coeffs(const DispersionModel& model) {
    if (model.family == Family::ConstantVorticity)
        throw UnsupportedError("longwave_kdv_coeffs: no closed-form coefficients for the "
                               "constant-vorticity family");
    return KdvCoeffs{1.0, 0.5 * (1.0 / 3.0 - model.tau)};
}

namespace detail {

double symbol_series(const DispersionModel& model, double z) {
    const double s = tanh_over_z_series(z);
    switch (model.family) {
    case Family::Gravity:
        return std::sqrt(s);
    case Family::CapillaryGravity:
        return std::sqrt((1.0 + model.tau * z * z) * s);
    case Family::ConstantVorticity: {
        const double w = model.branch == Branch::Plus ? model.varpi : -model.varpi;
        return w * s / 2.0 + std::sqrt(s + w * w * s * s / 4.0);
    }
    }
    return 0.0;
}

} // namespace detail

} // namespace whitham

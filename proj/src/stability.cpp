#include "stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rootfind.hpp"

namespace whitham {

namespace {

// Minus-branch (left-moving) waves propagate under the negated reflected
// symbol; the index factors belong to that wave's own symbol, which flips
// their signs while leaving Delta_MI unchanged.
double branch_sign(const DispersionModel& model) {
    return (model.family == Family::ConstantVorticity && model.branch == Branch::Minus) ? -1.0
                                                                                        : 1.0;
}

} // namespace

double delta_bf(const DispersionModel& model, double z) {
    if (z <= 0.0) throw DomainError("delta_bf: z must be positive");
    const double m0 = symbol(model, 0.0);
    return branch_sign(model) * (2.0 * (symbol(model, z) - symbol(model, 2.0 * z)) +
                                 (group_velocity(model, z) - m0));
}

IndexReport delta_mi(const DispersionModel& model, double z) {
    if (z <= 0.0) throw DomainError("delta_mi: z must be positive");
    IndexReport r;
    r.z = z;
    const double sgn = branch_sign(model);
    const double m0 = symbol(model, 0.0);
    r.factor_group_curvature = sgn * group_velocity_deriv(model, z);
    r.factor_longshort = sgn * (group_velocity(model, z) - m0);
    r.factor_second_harmonic = sgn * (symbol(model, z) - symbol(model, 2.0 * z));
    r.delta_bf = 2.0 * r.factor_second_harmonic + r.factor_longshort;

    if (std::abs(r.factor_second_harmonic) < kSecondHarmonicTol) {
        r.delta_mi = std::numeric_limits<double>::quiet_NaN();
        r.verdict = Verdict::Boundary;
        r.boundary_mechanism = Mechanism::SecondHarmonic;
        r.second_harmonic_resonant = true;
        return r;
    }

    r.delta_mi = r.factor_group_curvature * r.factor_longshort /
                 r.factor_second_harmonic * r.delta_bf;

    if (model.degenerate()) {
        r.verdict = Verdict::Degenerate;
    } else if (r.delta_mi < -kBoundaryTol) {
        r.verdict = Verdict::Unstable;
    } else if (r.delta_mi > kBoundaryTol) {
        r.verdict = Verdict::Stable;
    } else {
        r.verdict = Verdict::Boundary;
        // Attribute the zero to the factor closest to vanishing.
        const double g1 = std::abs(r.factor_group_curvature);
        const double g2 = std::abs(r.factor_longshort);
        const double g4 = std::abs(r.delta_bf);
        if (g1 <= g2 && g1 <= g4)
            r.boundary_mechanism = Mechanism::GroupVelExtremum;
        else if (g2 <= g4)
            r.boundary_mechanism = Mechanism::LongShortResonance;
        else
            r.boundary_mechanism = branch_sign(model) < 0.0 ? Mechanism::BFResonanceMinus
                                                            : Mechanism::BFResonancePlus;
    }
    return r;
}

std::vector<std::pair<double, Mechanism>> critical_wavenumbers(const DispersionModel& model,
                                                               double z_lo, double z_hi,
                                                               int n_grid) {
    if (!(0.0 < z_lo && z_lo < z_hi)) throw DomainError("critical_wavenumbers: need 0 < z_lo < z_hi");
    if (n_grid < 100) throw DomainError("critical_wavenumbers: n_grid must be >= 100");

    const double m0 = symbol(model, 0.0);
    const std::pair<Mechanism, std::function<double(double)>> mechanisms[] = {
        {Mechanism::GroupVelExtremum, [&](double z) { return group_velocity_deriv(model, z); }},
        {Mechanism::LongShortResonance, [&](double z) { return group_velocity(model, z) - m0; }},
        {Mechanism::SecondHarmonic,
         [&](double z) { return symbol(model, z) - symbol(model, 2.0 * z); }},
        {branch_sign(model) < 0.0 ? Mechanism::BFResonanceMinus : Mechanism::BFResonancePlus,
         [&](double z) { return delta_bf(model, z); }},
    };

    std::vector<std::pair<double, Mechanism>> out;
    for (const auto& [mech, f] : mechanisms)
        for (double root : scan_roots(f, z_lo, z_hi, n_grid, 1e-10))
            out.emplace_back(root, mech);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

double wilton_condition(const DispersionModel& model, double z) {
    if (model.family != Family::CapillaryGravity)
        throw UnsupportedError("wilton_condition: capillary-gravity family only");
    if (z <= 0.0) throw DomainError("wilton_condition: z must be positive");
    const double t2 = std::tanh(z) * std::tanh(z);
    return model.tau * z * z - t2 / (3.0 - t2);
}

std::vector<CriticalCurvePoint> vorticity_critical_curve(Branch branch,
                                                         const std::vector<double>& varpi_samples,
                                                         double z_max) {
    if (varpi_samples.empty())
        throw DomainError("vorticity_critical_curve: empty sample list");
    constexpr double kCap = 1e6;
    std::vector<CriticalCurvePoint> out;
    out.reserve(varpi_samples.size());
    for (double varpi : varpi_samples) {
        // The minus-branch curve is the plus-branch curve reflected in varpi.
        const DispersionModel model = DispersionModel::constant_vorticity(
            branch == Branch::Minus ? -varpi : varpi, Branch::Plus);
        auto f = [&](double z) { return delta_bf(model, z); };
        CriticalCurvePoint pt{varpi, std::numeric_limits<double>::quiet_NaN(), true};
        double hi = z_max;
        while (hi <= kCap) {
            // Delta_BF > 0 near the origin; look for its first descent through 0
            // on a log grid up to hi.
            const double lo = 1e-3;
            const int n = 2000;
            double zprev = lo, fprev = f(lo);
            for (int i = 1; i <= n; ++i) {
                const double z = lo * std::pow(hi / lo, static_cast<double>(i) / n);
                const double fz = f(z);
                if (fprev > 0.0 && fz <= 0.0) {
                    pt.z_c = bisect(f, zprev, z, 1e-12 * z);
                    pt.unbounded = false;
                    break;
                }
                zprev = z;
                fprev = fz;
            }
            if (!pt.unbounded) break;
            hi *= 2.0;
        }
        out.push_back(pt);
    }
    return out;
}

DeepWaterBand deep_water_band(double z, double s_lo, double s_hi) {
    if (!(z > 0.0 && 0.0 < s_lo && s_lo < s_hi))
        throw DomainError("deep_water_band: invalid probe parameters");
    auto index_at = [&](double s) {
        return delta_mi(DispersionModel::capillary_gravity(s / (z * z)), z).delta_mi;
    };

    // Locate the widest stable (Delta_MI > 0) run on a scan grid, then bisect
    // its two sign changes.
    const int n = 1000;
    std::vector<double> s(n), v(n);
    for (int i = 0; i < n; ++i) {
        s[i] = s_lo + (s_hi - s_lo) * i / (n - 1);
        v[i] = index_at(s[i]);
    }
    int best_start = -1, best_len = 0;
    for (int i = 0; i < n;) {
        if (v[i] > 0.0) {
            int j = i;
            while (j < n && v[j] > 0.0) ++j;
            if (j - i > best_len) {
                best_len = j - i;
                best_start = i;
            }
            i = j;
        } else {
            ++i;
        }
    }
    if (best_start <= 0 || best_start + best_len >= n)
        throw NumericalError("deep_water_band: stable band not interior to the scan range");
    DeepWaterBand band;
    band.lower = bisect(index_at, s[best_start - 1], s[best_start], 1e-12);
    band.upper = bisect(index_at, s[best_start + best_len - 1], s[best_start + best_len], 1e-12);
    return band;
}

} // namespace whitham

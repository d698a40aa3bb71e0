#include "whitham/whitham.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "diagrams.hpp"
#include "dispersion.hpp"
#include "floquet.hpp"
#include "stability.hpp"
#include "waves.hpp"

using namespace whitham;

struct wmi_model {
    DispersionModel m;
};

struct wmi_wave {
    TravelingWave w;
};

struct wmi_spectrum {
    SpectrumResult s;
};

struct wmi_curves {
    std::vector<StabilityCurve> c;
};

namespace {

thread_local std::string g_last_error = "no error";

wmi_status fail(wmi_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Runs fn, mapping the core exception hierarchy onto status codes.
template <typename Fn>
wmi_status guarded(Fn&& fn) {
    try {
        fn();
        return WMI_OK;
    } catch (const DomainError& e) {
        return fail(WMI_ERR_DOMAIN, e.what());
    } catch (const ResonanceError& e) {
        return fail(WMI_ERR_RESONANCE, e.what());
    } catch (const ConvergenceError& e) {
        return fail(WMI_ERR_CONVERGENCE, e.what());
    } catch (const DimensionError& e) {
        return fail(WMI_ERR_DIMENSION, e.what());
    } catch (const UnsupportedError& e) {
        return fail(WMI_ERR_UNSUPPORTED, e.what());
    } catch (const NumericalError& e) {
        return fail(WMI_ERR_NUMERICAL, e.what());
    } catch (const std::exception& e) {
        return fail(WMI_ERR_NUMERICAL, e.what());
    }
}

wmi_status check_handle(const void* p) {
    return p ? WMI_OK : fail(WMI_ERR_INVALID, "null handle");
}

Family to_family(wmi_family f) {
    switch (f) {
    case WMI_FAMILY_GRAVITY: return Family::Gravity;
    case WMI_FAMILY_CAPILLARY_GRAVITY: return Family::CapillaryGravity;
    default: return Family::ConstantVorticity;
    }
}

wmi_verdict to_c(Verdict v) {
    switch (v) {
    case Verdict::Stable: return WMI_VERDICT_STABLE;
    case Verdict::Unstable: return WMI_VERDICT_UNSTABLE;
    case Verdict::Boundary: return WMI_VERDICT_BOUNDARY;
    default: return WMI_VERDICT_DEGENERATE;
    }
}

wmi_mechanism to_c(Mechanism m) {
    switch (m) {
    case Mechanism::GroupVelExtremum: return WMI_MECH_GROUP_VEL_EXTREMUM;
    case Mechanism::LongShortResonance: return WMI_MECH_LONG_SHORT;
    case Mechanism::SecondHarmonic: return WMI_MECH_SECOND_HARMONIC;
    case Mechanism::BFResonancePlus: return WMI_MECH_BF_PLUS;
    default: return WMI_MECH_BF_MINUS;
    }
}

} // namespace

extern "C" {

const char* wmi_last_error(void) { return g_last_error.c_str(); }

wmi_status wmi_model_create_gravity(wmi_model** out) {
    if (!out) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] { *out = new wmi_model{DispersionModel::gravity()}; });
}

wmi_status wmi_model_create_capillary(double tau, wmi_model** out) {
    if (!out) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] { *out = new wmi_model{DispersionModel::capillary_gravity(tau)}; });
}

wmi_status wmi_model_create_vorticity(double varpi, wmi_branch branch, wmi_model** out) {
    if (!out) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = new wmi_model{DispersionModel::constant_vorticity(
            varpi, branch == WMI_BRANCH_MINUS ? Branch::Minus : Branch::Plus)};
    });
}

wmi_status wmi_model_create_dimensional(double g, double d, double T, double gamma,
                                        wmi_family family, wmi_branch branch,
                                        wmi_model** out, double* speed_scale,
                                        double* length_scale) {
    if (!out) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] {
        const NondimResult r =
            nondimensionalize(DimensionalParams{g, d, T, gamma}, to_family(family),
                              branch == WMI_BRANCH_MINUS ? Branch::Minus : Branch::Plus);
        *out = new wmi_model{r.model};
        if (speed_scale) *speed_scale = r.speed_scale;
        if (length_scale) *length_scale = r.length_scale;
    });
}

void wmi_model_free(wmi_model* model) { delete model; }

wmi_status wmi_model_family(const wmi_model* model, wmi_family* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    switch (model->m.family) {
    case Family::Gravity: *out = WMI_FAMILY_GRAVITY; break;
    case Family::CapillaryGravity: *out = WMI_FAMILY_CAPILLARY_GRAVITY; break;
    case Family::ConstantVorticity: *out = WMI_FAMILY_CONSTANT_VORTICITY; break;
    }
    return WMI_OK;
}

wmi_status wmi_model_tau(const wmi_model* model, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    *out = model->m.tau;
    return WMI_OK;
}

wmi_status wmi_model_varpi(const wmi_model* model, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    *out = model->m.varpi;
    return WMI_OK;
}

wmi_status wmi_model_branch(const wmi_model* model, wmi_branch* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    *out = model->m.branch == Branch::Minus ? WMI_BRANCH_MINUS : WMI_BRANCH_PLUS;
    return WMI_OK;
}

wmi_status wmi_model_degenerate(const wmi_model* model, int* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    *out = model->m.degenerate() ? 1 : 0;
    return WMI_OK;
}

wmi_status wmi_symbol(const wmi_model* model, double z, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = symbol(model->m, z); });
}

wmi_status wmi_symbol_deriv(const wmi_model* model, double z, int order, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = symbol_deriv(model->m, z, order); });
}

wmi_status wmi_group_velocity(const wmi_model* model, double z, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = group_velocity(model->m, z); });
}

wmi_status wmi_group_velocity_deriv(const wmi_model* model, double z, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = group_velocity_deriv(model->m, z); });
}

wmi_status wmi_longwave_kdv_coeffs(const wmi_model* model, double* c0,
                                   double* dispersion_coeff) {
    if (check_handle(model) || !c0 || !dispersion_coeff) return WMI_ERR_INVALID;
    return guarded([&] {
        const KdvCoeffs k = longwave_kdv_coeffs(model->m);
        *c0 = k.c0;
        *dispersion_coeff = k.dispersion_coeff;
    });
}

wmi_status wmi_resonant_wavenumbers(const wmi_model* model, int N_max, int* N_out,
                                    double* k_out, size_t* count) {
    if (check_handle(model) || !count) return WMI_ERR_INVALID;
    return guarded([&] {
        const auto ks = resonant_wavenumbers(model->m, N_max);
        if (k_out) {
            const size_t n = std::min(*count, ks.size());
            for (size_t i = 0; i < n; ++i) {
                if (N_out) N_out[i] = ks[i].first;
                k_out[i] = ks[i].second;
            }
        }
        *count = ks.size();
    });
}

wmi_status wmi_in_sigma(const wmi_model* model, double k, int* in_sigma_out,
                        double* distance) {
    if (check_handle(model) || !in_sigma_out) return WMI_ERR_INVALID;
    return guarded([&] {
        const SigmaQuery q = in_sigma(model->m, k);
        *in_sigma_out = q.in_sigma ? 1 : 0;
        if (distance) *distance = q.distance;
    });
}

wmi_status wmi_wave_expansion(const wmi_model* model, double k, double a, double b,
                              wmi_wave** out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = new wmi_wave{expansion_wave(model->m, k, a, b)}; });
}

wmi_status wmi_wave_refine(const wmi_model* model, const wmi_wave* seed, int N_F,
                           double tol, wmi_wave** out) {
    if (check_handle(model) || check_handle(seed) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = new wmi_wave{refine_wave(model->m, seed->w, N_F, tol)}; });
}

wmi_status wmi_wave_galilean_shift(const wmi_model* model, const wmi_wave* wave,
                                   double v, wmi_wave** out) {
    if (check_handle(model) || check_handle(wave) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = new wmi_wave{galilean_shift(model->m, wave->w, v)}; });
}

wmi_status wmi_wave_residual(const wmi_model* model, const wmi_wave* wave, double* out) {
    if (check_handle(model) || check_handle(wave) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = residual(model->m, wave->w); });
}

void wmi_wave_free(wmi_wave* wave) { delete wave; }

wmi_status wmi_wave_params(const wmi_wave* wave, double* k, double* a, double* b,
                           double* c) {
    if (check_handle(wave)) return WMI_ERR_INVALID;
    if (k) *k = wave->w.k;
    if (a) *a = wave->w.a;
    if (b) *b = wave->w.b;
    if (c) *c = wave->w.c;
    return WMI_OK;
}

wmi_status wmi_wave_coeffs(const wmi_wave* wave, double* coeffs, size_t* count) {
    if (check_handle(wave) || !count) return WMI_ERR_INVALID;
    if (coeffs) {
        const size_t n = std::min(*count, wave->w.cosine_coeffs.size());
        std::memcpy(coeffs, wave->w.cosine_coeffs.data(), n * sizeof(double));
    }
    *count = wave->w.cosine_coeffs.size();
    return WMI_OK;
}

wmi_status wmi_delta_bf(const wmi_model* model, double z, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = delta_bf(model->m, z); });
}

wmi_status wmi_index(const wmi_model* model, double z, wmi_index_report* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] {
        const IndexReport r = delta_mi(model->m, z);
        out->z = r.z;
        out->delta_bf = r.delta_bf;
        out->delta_mi = r.delta_mi;
        out->factor_group_curvature = r.factor_group_curvature;
        out->factor_longshort = r.factor_longshort;
        out->factor_second_harmonic = r.factor_second_harmonic;
        out->verdict = to_c(r.verdict);
        out->second_harmonic_resonant = r.second_harmonic_resonant ? 1 : 0;
    });
}

wmi_status wmi_critical_wavenumbers(const wmi_model* model, double z_lo, double z_hi,
                                    int n_grid, double* z_out, wmi_mechanism* mech_out,
                                    size_t* count) {
    if (check_handle(model) || !count) return WMI_ERR_INVALID;
    return guarded([&] {
        const auto roots = critical_wavenumbers(model->m, z_lo, z_hi, n_grid);
        if (z_out) {
            const size_t n = std::min(*count, roots.size());
            for (size_t i = 0; i < n; ++i) {
                z_out[i] = roots[i].first;
                if (mech_out) mech_out[i] = to_c(roots[i].second);
            }
        }
        *count = roots.size();
    });
}

wmi_status wmi_wilton_condition(const wmi_model* model, double z, double* out) {
    if (check_handle(model) || !out) return WMI_ERR_INVALID;
    return guarded([&] { *out = wilton_condition(model->m, z); });
}

wmi_status wmi_vorticity_critical_curve(wmi_branch branch, const double* varpi,
                                        size_t n, double* z_c, int* unbounded) {
    if (!varpi || !z_c || n == 0) return fail(WMI_ERR_INVALID, "null buffer or empty sample list");
    return guarded([&] {
        const auto pts = vorticity_critical_curve(
            branch == WMI_BRANCH_MINUS ? Branch::Minus : Branch::Plus,
            std::vector<double>(varpi, varpi + n));
        for (size_t i = 0; i < n; ++i) {
            z_c[i] = pts[i].z_c;
            if (unbounded) unbounded[i] = pts[i].unbounded ? 1 : 0;
        }
    });
}

wmi_status wmi_deep_water_band(double z, double* lower, double* upper) {
    if (!lower || !upper) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] {
        const DeepWaterBand b = deep_water_band(z > 0.0 ? z : 50.0);
        *lower = b.lower;
        *upper = b.upper;
    });
}

wmi_status wmi_bloch_spectrum(const wmi_model* model, const wmi_wave* wave, double xi,
                              int N_F, double r_origin, wmi_spectrum** out) {
    if (check_handle(model) || check_handle(wave) || !out) return WMI_ERR_INVALID;
    return guarded(
        [&] { *out = new wmi_spectrum{bloch_spectrum(model->m, wave->w, xi, N_F, r_origin)}; });
}

void wmi_spectrum_free(wmi_spectrum* spectrum) { delete spectrum; }

wmi_status wmi_spectrum_size(const wmi_spectrum* spectrum, size_t* count) {
    if (check_handle(spectrum) || !count) return WMI_ERR_INVALID;
    *count = spectrum->s.eigenvalues.size();
    return WMI_OK;
}

wmi_status wmi_spectrum_eigenvalue(const wmi_spectrum* spectrum, size_t i, double* re,
                                   double* im) {
    if (check_handle(spectrum)) return WMI_ERR_INVALID;
    if (i >= spectrum->s.eigenvalues.size()) return fail(WMI_ERR_INVALID, "index out of range");
    if (re) *re = spectrum->s.eigenvalues[i].real();
    if (im) *im = spectrum->s.eigenvalues[i].imag();
    return WMI_OK;
}

wmi_status wmi_spectrum_max_real_near_origin(const wmi_spectrum* spectrum, double* out) {
    if (check_handle(spectrum) || !out) return WMI_ERR_INVALID;
    *out = spectrum->s.max_real_near_origin;
    return WMI_OK;
}

wmi_status wmi_unmodulated_spectrum(const wmi_model* model, double k, double xi,
                                    int N_F, double* out_re_im) {
    if (check_handle(model) || !out_re_im) return WMI_ERR_INVALID;
    return guarded([&] {
        const auto ev = unmodulated_spectrum(model->m, k, xi, N_F);
        for (size_t i = 0; i < ev.size(); ++i) {
            out_re_im[2 * i] = ev[i].real();
            out_re_im[2 * i + 1] = ev[i].imag();
        }
    });
}

wmi_status wmi_mi_growth_check(const wmi_model* model, double k, double a,
                               const double* xi_list, size_t n_xi, int N_F,
                               wmi_growth_check* out) {
    if (check_handle(model) || !xi_list || !out) return WMI_ERR_INVALID;
    return guarded([&] {
        const GrowthCheck gc =
            mi_growth_check(model->m, k, a, std::vector<double>(xi_list, xi_list + n_xi), N_F);
        out->predicted = to_c(gc.predicted);
        out->observed = to_c(gc.observed);
        out->agree = gc.agree ? 1 : 0;
        out->indeterminate = gc.indeterminate ? 1 : 0;
        out->max_growth = gc.max_growth;
        out->delta_mi = gc.delta_mi;
    });
}

wmi_status wmi_capillary_diagram(double z_lo, double z_hi, double y_lo, double y_hi,
                                 int resolution, wmi_curves** out) {
    if (!out) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = new wmi_curves{capillary_diagram({z_lo, z_hi}, {y_lo, y_hi}, resolution)};
    });
}

wmi_status wmi_vorticity_diagram(double varpi_lo, double varpi_hi, double z_lo,
                                 double z_hi, int resolution, wmi_curves** out) {
    if (!out) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = new wmi_curves{vorticity_diagram({varpi_lo, varpi_hi}, {z_lo, z_hi}, resolution)};
    });
}

void wmi_curves_free(wmi_curves* curves) { delete curves; }

wmi_status wmi_curves_count(const wmi_curves* curves, size_t* count) {
    if (check_handle(curves) || !count) return WMI_ERR_INVALID;
    *count = curves->c.size();
    return WMI_OK;
}

wmi_status wmi_curve_info(const wmi_curves* curves, size_t i, wmi_mechanism* mechanism,
                          wmi_curve_kind* kind, size_t* n_points) {
    if (check_handle(curves)) return WMI_ERR_INVALID;
    if (i >= curves->c.size()) return fail(WMI_ERR_INVALID, "curve index out of range");
    const StabilityCurve& c = curves->c[i];
    if (mechanism) *mechanism = to_c(c.mechanism);
    if (kind) {
        switch (c.kind) {
        case CurveKind::MechanismLevelSet: *kind = WMI_CURVE_MECHANISM; break;
        case CurveKind::CriticalTauLine: *kind = WMI_CURVE_TAU_CRITICAL_LINE; break;
        case CurveKind::GravityCriticalLine: *kind = WMI_CURVE_GRAVITY_CRITICAL_LINE; break;
        }
    }
    if (n_points) *n_points = c.points.size();
    return WMI_OK;
}

wmi_status wmi_curve_points(const wmi_curves* curves, size_t i, double* xy) {
    if (check_handle(curves) || !xy) return WMI_ERR_INVALID;
    if (i >= curves->c.size()) return fail(WMI_ERR_INVALID, "curve index out of range");
    const auto& pts = curves->c[i].points;
    for (size_t j = 0; j < pts.size(); ++j) {
        xy[2 * j] = pts[j].first;
        xy[2 * j + 1] = pts[j].second;
    }
    return WMI_OK;
}

wmi_status wmi_classify_point(wmi_plane plane, double x, double y,
                              wmi_verdict* verdict, wmi_verdict* verdict_minus) {
    if (!verdict) return fail(WMI_ERR_INVALID, "null output pointer");
    return guarded([&] {
        const PointClassification pc = classify_point(
            plane == WMI_PLANE_VORTICITY ? DiagramPlane::VorticityPlane
                                         : DiagramPlane::CapillaryPlane,
            x, y);
        *verdict = to_c(pc.verdict);
        if (verdict_minus) *verdict_minus = pc.has_minus ? to_c(pc.verdict_minus) : to_c(pc.verdict);
    });
}

} // extern "C"

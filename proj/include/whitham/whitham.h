/* C API for the Whitham modulational-stability library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return WMI_OK (0) on success and a nonzero status otherwise;
 * wmi_last_error() describes the most recent failure on the calling thread.
 * Everything is nondimensional (g = d = 1) unless stated otherwise.
 */
#ifndef WHITHAM_MI_H
#define WHITHAM_MI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wmi_model wmi_model;
typedef struct wmi_wave wmi_wave;
typedef struct wmi_spectrum wmi_spectrum;
typedef struct wmi_curves wmi_curves;

typedef enum wmi_status {
    WMI_OK = 0,
    WMI_ERR_DOMAIN = 1,       /* parameter outside its domain */
    WMI_ERR_RESONANCE = 2,    /* wave number outside the bifurcation set */
    WMI_ERR_CONVERGENCE = 3,  /* iteration failed to converge */
    WMI_ERR_DIMENSION = 4,    /* truncation too small */
    WMI_ERR_NUMERICAL = 5,    /* bracketing / eigensolver failure */
    WMI_ERR_UNSUPPORTED = 6,  /* operation undefined for this family */
    WMI_ERR_INVALID = 7       /* null handle or bad argument */
} wmi_status;

typedef enum wmi_family {
    WMI_FAMILY_GRAVITY = 0,
    WMI_FAMILY_CAPILLARY_GRAVITY = 1,
    WMI_FAMILY_CONSTANT_VORTICITY = 2
} wmi_family;

typedef enum wmi_branch { WMI_BRANCH_PLUS = 0, WMI_BRANCH_MINUS = 1 } wmi_branch;

typedef enum wmi_verdict {
    WMI_VERDICT_STABLE = 0,
    WMI_VERDICT_UNSTABLE = 1,
    WMI_VERDICT_BOUNDARY = 2,
    WMI_VERDICT_DEGENERATE = 3
} wmi_verdict;

typedef enum wmi_mechanism {
    WMI_MECH_GROUP_VEL_EXTREMUM = 0,  /* (z m(z))'' = 0 */
    WMI_MECH_LONG_SHORT = 1,          /* (z m(z))' = m(0) */
    WMI_MECH_SECOND_HARMONIC = 2,     /* m(z) = m(2z) */
    WMI_MECH_BF_PLUS = 3,             /* Delta_BF = 0, plus branch */
    WMI_MECH_BF_MINUS = 4             /* Delta_BF = 0, minus branch */
} wmi_mechanism;

typedef enum wmi_plane {
    WMI_PLANE_CAPILLARY = 0, /* x = kd, y = k sqrt(T/g) */
    WMI_PLANE_VORTICITY = 1  /* x = varpi, y = kd */
} wmi_plane;

typedef enum wmi_curve_kind {
    WMI_CURVE_MECHANISM = 0,
    WMI_CURVE_TAU_CRITICAL_LINE = 1,
    WMI_CURVE_GRAVITY_CRITICAL_LINE = 2
} wmi_curve_kind;

/* Thread-local message for the last failure. Never NULL. */
const char* wmi_last_error(void);

/* ---- models ------------------------------------------------------------ */

wmi_status wmi_model_create_gravity(wmi_model** out);
wmi_status wmi_model_create_capillary(double tau, wmi_model** out);
wmi_status wmi_model_create_vorticity(double varpi, wmi_branch branch, wmi_model** out);

/* Dimensional inputs: tau = T/(g d^2), varpi = gamma sqrt(d/g),
 * speed_scale = sqrt(g d), length_scale = d. Scale outputs may be NULL. */
wmi_status wmi_model_create_dimensional(double g, double d, double T, double gamma,
                                        wmi_family family, wmi_branch branch,
                                        wmi_model** out, double* speed_scale,
                                        double* length_scale);

void wmi_model_free(wmi_model* model);

wmi_status wmi_model_family(const wmi_model* model, wmi_family* out);
wmi_status wmi_model_tau(const wmi_model* model, double* out);
wmi_status wmi_model_varpi(const wmi_model* model, double* out);
wmi_status wmi_model_branch(const wmi_model* model, wmi_branch* out);
/* 1 when tau is within 1e-9 of 1/3 (index machinery inconclusive). */
wmi_status wmi_model_degenerate(const wmi_model* model, int* out);

/* ---- dispersion -------------------------------------------------------- */

wmi_status wmi_symbol(const wmi_model* model, double z, double* out);
wmi_status wmi_symbol_deriv(const wmi_model* model, double z, int order, double* out);
wmi_status wmi_group_velocity(const wmi_model* model, double z, double* out);
wmi_status wmi_group_velocity_deriv(const wmi_model* model, double z, double* out);
wmi_status wmi_longwave_kdv_coeffs(const wmi_model* model, double* c0,
                                   double* dispersion_coeff);

/* ---- traveling waves --------------------------------------------------- */

/* Resonant wave numbers k_N, N = 2..N_max. Call with k_out = NULL to query
 * the count. Arrays must hold at least *count entries. */
wmi_status wmi_resonant_wavenumbers(const wmi_model* model, int N_max, int* N_out,
                                    double* k_out, size_t* count);

wmi_status wmi_in_sigma(const wmi_model* model, double k, int* in_sigma,
                        double* distance);

wmi_status wmi_wave_expansion(const wmi_model* model, double k, double a, double b,
                              wmi_wave** out);
wmi_status wmi_wave_refine(const wmi_model* model, const wmi_wave* seed, int N_F,
                           double tol, wmi_wave** out);
wmi_status wmi_wave_galilean_shift(const wmi_model* model, const wmi_wave* wave,
                                   double v, wmi_wave** out);
wmi_status wmi_wave_residual(const wmi_model* model, const wmi_wave* wave, double* out);
void wmi_wave_free(wmi_wave* wave);

wmi_status wmi_wave_params(const wmi_wave* wave, double* k, double* a, double* b,
                           double* c);
/* Half-spectrum coefficients w0..wN of w(z) = w0 + sum 2 w_n cos(nz).
 * Query the count with coeffs = NULL. */
wmi_status wmi_wave_coeffs(const wmi_wave* wave, double* coeffs, size_t* count);

/* ---- stability index --------------------------------------------------- */

typedef struct wmi_index_report {
    double z;
    double delta_bf;
    double delta_mi; /* NaN at a second-harmonic resonance */
    double factor_group_curvature;
    double factor_longshort;
    double factor_second_harmonic;
    wmi_verdict verdict;
    int second_harmonic_resonant;
} wmi_index_report;

wmi_status wmi_delta_bf(const wmi_model* model, double z, double* out);
wmi_status wmi_index(const wmi_model* model, double z, wmi_index_report* out);

/* Mechanism roots on (z_lo, z_hi); query count with z_out = NULL. */
wmi_status wmi_critical_wavenumbers(const wmi_model* model, double z_lo, double z_hi,
                                    int n_grid, double* z_out, wmi_mechanism* mech_out,
                                    size_t* count);

wmi_status wmi_wilton_condition(const wmi_model* model, double z, double* out);

/* z_c per vorticity sample; unbounded[i] = 1 when no sign change was found
 * below the search cap (z_c is NaN there). */
wmi_status wmi_vorticity_critical_curve(wmi_branch branch, const double* varpi,
                                        size_t n, double* z_c, int* unbounded);

wmi_status wmi_deep_water_band(double z, double* lower, double* upper);

/* ---- Floquet spectra --------------------------------------------------- */

/* r_origin <= 0 selects the default 10 |a|. */
wmi_status wmi_bloch_spectrum(const wmi_model* model, const wmi_wave* wave, double xi,
                              int N_F, double r_origin, wmi_spectrum** out);
void wmi_spectrum_free(wmi_spectrum* spectrum);
wmi_status wmi_spectrum_size(const wmi_spectrum* spectrum, size_t* count);
wmi_status wmi_spectrum_eigenvalue(const wmi_spectrum* spectrum, size_t i, double* re,
                                   double* im);
wmi_status wmi_spectrum_max_real_near_origin(const wmi_spectrum* spectrum, double* out);

/* Closed-form eigenvalues i (n+xi)(m(k) - m(k(n+xi))), n = -N_F..N_F,
 * written as interleaved (re, im) pairs into out[2(n+N_F)..]. */
wmi_status wmi_unmodulated_spectrum(const wmi_model* model, double k, double xi,
                                    int N_F, double* out_re_im);

typedef struct wmi_growth_check {
    wmi_verdict predicted;
    wmi_verdict observed;
    int agree;
    int indeterminate;
    double max_growth;
    double delta_mi;
} wmi_growth_check;

wmi_status wmi_mi_growth_check(const wmi_model* model, double k, double a,
                               const double* xi_list, size_t n_xi, int N_F,
                               wmi_growth_check* out);

/* ---- diagrams ---------------------------------------------------------- */

wmi_status wmi_capillary_diagram(double z_lo, double z_hi, double y_lo, double y_hi,
                                 int resolution, wmi_curves** out);
wmi_status wmi_vorticity_diagram(double varpi_lo, double varpi_hi, double z_lo,
                                 double z_hi, int resolution, wmi_curves** out);
void wmi_curves_free(wmi_curves* curves);
wmi_status wmi_curves_count(const wmi_curves* curves, size_t* count);
wmi_status wmi_curve_info(const wmi_curves* curves, size_t i, wmi_mechanism* mechanism,
                          wmi_curve_kind* kind, size_t* n_points);
/* Interleaved (x, y) pairs; buffer must hold 2 * n_points doubles. */
wmi_status wmi_curve_points(const wmi_curves* curves, size_t i, double* xy);

/* Per-branch verdicts; verdict_minus is meaningful in the vorticity plane. */
wmi_status wmi_classify_point(wmi_plane plane, double x, double y,
                              wmi_verdict* verdict, wmi_verdict* verdict_minus);

#ifdef __cplusplus
}
#endif

#endif /* WHITHAM_MI_H */

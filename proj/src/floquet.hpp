#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dispersion.hpp"
#include "types.hpp"
#include "waves.hpp"

namespace whitham {

struct SpectrumResult {
    double xi = 0.0;
    int N_F = 0;
    std::vector<std::complex<double>> eigenvalues;
    double max_real_near_origin = 0.0;  // over |lambda| <= r_origin
    double r_origin = 0.0;
};

// Truncated Bloch operator L_xi = d/dz (-M_k + c - 2w) in the Fourier basis
// e^{i n z}, n = -N_F..N_F: entry (m, n) is
// i (m+xi) ((c - m(k(m+xi))) delta_mn - 2 w_{m-n}).
Eigen::MatrixXcd bloch_matrix(const DispersionModel& model, const TravelingWave& wave,
                              double xi, int N_F);

// Dense eigensolve of the truncated Bloch operator. r_origin <= 0 selects the
// default 10 |a|.
SpectrumResult bloch_spectrum(const DispersionModel& model, const TravelingWave& wave,
                              double xi, int N_F, double r_origin = 0.0);

// Closed-form spectrum at a = 0: { i (n+xi) (m(k) - m(k(n+xi))) : |n| <= N_F }.
std::vector<std::complex<double>> unmodulated_spectrum(const DispersionModel& model,
                                                       double k, double xi, int N_F);

// Generalized kernel basis of L_0 at small a, to linear order, as two-sided
// Fourier coefficient vectors over n = -N_F..N_F.
struct KernelBasis {
    int N_F;
    Eigen::VectorXcd phi1;  // cos z + (-1/2 + a cos 2z)/(m(k)-m(2k))
    Eigen::VectorXcd phi2;  // sin z + a sin 2z/(m(k)-m(2k))
    Eigen::VectorXcd phi3;  // 1
};

KernelBasis kernel_basis(const DispersionModel& model, double k, double a, int N_F = 8);

struct GrowthCheck {
    Verdict predicted;
    Verdict observed;
    bool agree;
    bool indeterminate;       // observation fell between the two thresholds
    double max_growth;        // max over xi of max_real_near_origin
    double delta_mi;
};

// Compares the sign of the index against near-origin spectral growth of the
// refined wave at the supplied Bloch parameters.
GrowthCheck mi_growth_check(const DispersionModel& model, double k, double a,
                            const std::vector<double>& xi_list, int N_F,
                            double g_thresh = 1e-2);

} // namespace whitham

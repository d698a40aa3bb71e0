#pragma once

#include <utility>
#include <vector>

#include "dispersion.hpp"
#include "types.hpp"

namespace whitham {

enum class WaveSource { Expansion, Refined };

// Even 2*pi-periodic traveling-wave profile, stored as the half spectrum of
// w(z) = w0 + sum_{n>=1} 2 w_n cos(n z), together with the speed c and the
// branch parameters (k, a, b).
struct TravelingWave {
    double k = 1.0;
    double a = 0.0;
    double b = 0.0;
    std::vector<double> cosine_coeffs;  // w0 .. wN
    double c = 0.0;
    WaveSource source = WaveSource::Expansion;

    int harmonics() const { return static_cast<int>(cosine_coeffs.size()) - 1; }

    // Two-sided Fourier coefficient at mode n (real, even profile).
    double coeff(int n) const {
        const int j = n < 0 ? -n : n;
        return j <= harmonics() ? cosine_coeffs[j] : 0.0;
    }

    double eval(double z) const;
};

// The unique k_N solving m(k) = m(N k), for N = 2..N_max. Nonempty only for
// the capillary-gravity family with 0 < tau < 1/3.
std::vector<std::pair<int, double>> resonant_wavenumbers(const DispersionModel& model,
                                                         int N_max);

struct SigmaQuery {
    bool in_sigma;
    double distance;  // to the nearest k_N (infinity if none)
    int nearest_N;    // 0 if none
    double nearest_kN;
};

SigmaQuery in_sigma(const DispersionModel& model, double k, double guard = 1e-6,
                    int N_max = 64);

// Small-amplitude asymptotic wave: profile and speed to quadratic order in a
// and the displayed orders in b.
TravelingWave expansion_wave(const DispersionModel& model, double k, double a, double b);

// Shift of the frame of reference; preserves the quadrature residual.
TravelingWave galilean_shift(const DispersionModel& model, const TravelingWave& wave,
                             double v);

// Max-norm residual of the traveling-wave quadrature
// M_k w - c w + w^2 - (m(0)-c)^2 b on a dense collocation grid.
double residual(const DispersionModel& model, const TravelingWave& wave);

// Newton-Galerkin refinement at fixed amplitude normalization w1 = a/2 and
// b = 0. Truncates at N_F cosine modes; converged when the collocation
// residual drops below tol.
TravelingWave refine_wave(const DispersionModel& model, const TravelingWave& seed,
                          int N_F, double tol, int* iterations = nullptr);

} // namespace whitham

#include "floquet.hpp"

#include <cmath>

#include "stability.hpp"

namespace whitham {

namespace {

// Even extension of the symbol.
double sym(const DispersionModel& model, double z) { return symbol(model, std::abs(z)); }

} // namespace

Eigen::MatrixXcd bloch_matrix(const DispersionModel& model, const TravelingWave& wave,
                              double xi, int N_F) {
    if (wave.b != 0.0) throw DomainError("bloch_matrix: wave must have b = 0");
    // Highest harmonic actually present in the wave.
    int highest = 0;
    for (int n = wave.harmonics(); n >= 1; --n)
        if (wave.cosine_coeffs[n] != 0.0) {
            highest = n;
            break;
        }
    if (N_F < 2 + highest)
        throw DimensionError("bloch_matrix: truncation N_F too small for the wave harmonics");

    const int dim = 2 * N_F + 1;
    const std::complex<double> I(0.0, 1.0);
    Eigen::MatrixXcd A(dim, dim);
    for (int m = -N_F; m <= N_F; ++m) {
        const double mu = m + xi;
        const double prefactor_re = mu;  // i (m+xi)
        for (int n = -N_F; n <= N_F; ++n) {
            double entry = -2.0 * wave.coeff(m - n);
            if (m == n) entry += wave.c - sym(model, wave.k * mu);
            A(m + N_F, n + N_F) = I * prefactor_re * entry;
        }
    }
    return A;
}

SpectrumResult bloch_spectrum(const DispersionModel& model, const TravelingWave& wave,
                              double xi, int N_F, double r_origin) {
    SpectrumResult r;
    r.xi = xi;
    r.N_F = N_F;
    r.r_origin = r_origin > 0.0 ? r_origin : 10.0 * std::abs(wave.a);

    const Eigen::MatrixXcd A = bloch_matrix(model, wave, xi, N_F);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("bloch_spectrum: eigensolver did not converge");

    const auto& ev = solver.eigenvalues();
    r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    r.max_real_near_origin = 0.0;
    for (const auto& lambda : r.eigenvalues)
        if (std::abs(lambda) <= r.r_origin)
            r.max_real_near_origin = std::max(r.max_real_near_origin, lambda.real());
    return r;
}

std::vector<std::complex<double>> unmodulated_spectrum(const DispersionModel& model,
                                                       double k, double xi, int N_F) {
    const double mk = symbol(model, k);
    std::vector<std::complex<double>> out;
    out.reserve(2 * N_F + 1);
    for (int n = -N_F; n <= N_F; ++n) {
        const double mu = n + xi;
        out.emplace_back(0.0, mu * (mk - sym(model, k * mu)));
    }
    return out;
}

KernelBasis kernel_basis(const DispersionModel& model, double k, double a, int N_F) {
    if (k <= 0.0) throw DomainError("kernel_basis: k must be positive");
    const SigmaQuery q = in_sigma(model, k);
    if (!q.in_sigma) throw ResonanceError("kernel_basis: k is resonant");
    const double d2 = symbol(model, k) - symbol(model, 2.0 * k);
    if (std::abs(d2) < 1e-10)
        throw ResonanceError("kernel_basis: m(k)=m(2k), second-harmonic resonance");
    if (N_F < 2) throw DimensionError("kernel_basis: N_F must be >= 2");

    const int dim = 2 * N_F + 1;
    KernelBasis b{N_F, Eigen::VectorXcd::Zero(dim), Eigen::VectorXcd::Zero(dim),
                  Eigen::VectorXcd::Zero(dim)};
    auto at = [&](Eigen::VectorXcd& v, int n) -> std::complex<double>& { return v(n + N_F); };
    const std::complex<double> I(0.0, 1.0);

    at(b.phi1, 1) = 0.5;
    at(b.phi1, -1) = 0.5;
    at(b.phi1, 0) = -0.5 / d2;
    at(b.phi1, 2) = 0.5 * a / d2;
    at(b.phi1, -2) = 0.5 * a / d2;

    at(b.phi2, 1) = -0.5 * I;
    at(b.phi2, -1) = 0.5 * I;
    at(b.phi2, 2) = -0.5 * I * a / d2;
    at(b.phi2, -2) = 0.5 * I * a / d2;

    at(b.phi3, 0) = 1.0;
    return b;
}

GrowthCheck mi_growth_check(const DispersionModel& model, double k, double a,
                            const std::vector<double>& xi_list, int N_F,
                            double g_thresh) {
    if (xi_list.empty()) throw DomainError("mi_growth_check: empty xi list");
    if (!(a > 0.0 && a <= 0.02))
        throw DomainError("mi_growth_check: amplitude must satisfy 0 < a <= 0.02");

    GrowthCheck gc{};
    const IndexReport report = delta_mi(model, k);
    gc.delta_mi = report.delta_mi;
    gc.predicted = report.verdict;

    // Refined wave: expansion error is O(a^3), below the O(a^2) growth scale.
    const TravelingWave seed = expansion_wave(model, k, a, 0.0);
    const int N_wave = std::min(16, N_F - 2);
    const TravelingWave wave = refine_wave(model, seed, std::max(8, N_wave), 1e-12);

    // The modulational sideband occupies 0 < xi < xi_max with xi_max
    // proportional to a, so fixed Bloch parameters can fall entirely
    // outside it at small amplitude.  Sample each requested xi together
    // with an amplitude-scaled copy to keep the sideband covered.
    std::vector<double> samples;
    samples.reserve(2 * xi_list.size());
    for (double xi : xi_list) {
        samples.push_back(xi);
        samples.push_back(xi * 10.0 * a);
    }

    gc.max_growth = 0.0;
    for (double xi : samples) {
        const SpectrumResult s = bloch_spectrum(model, wave, xi, N_F);
        gc.max_growth = std::max(gc.max_growth, s.max_real_near_origin);
    }

    const double unstable_thresh = g_thresh * a * a;
    const double stable_thresh = 1e-2 * unstable_thresh;
    if (gc.max_growth > unstable_thresh) {
        gc.observed = Verdict::Unstable;
        gc.indeterminate = false;
    } else if (gc.max_growth < stable_thresh) {
        gc.observed = Verdict::Stable;
        gc.indeterminate = false;
    } else {
        gc.observed = Verdict::Boundary;
        gc.indeterminate = true;
    }
    gc.agree = !gc.indeterminate && gc.predicted == gc.observed;
    return gc;
}

} // namespace whitham

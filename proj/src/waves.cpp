#include "waves.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rootfind.hpp"

namespace whitham {

namespace {

constexpr double kDenomGuard = 1e-10;

// Cosine coefficients of w^2, modes 0..N, for w given by half spectrum w0..wN.
// Two-sided convolution: (w^2)_n = sum_j w_j w_{n-j}.
std::vector<double> square_coeffs(const std::vector<double>& w, int N_out) {
    const int N = static_cast<int>(w.size()) - 1;
    auto at = [&](int j) {
        const int i = j < 0 ? -j : j;
        return i <= N ? w[i] : 0.0;
    };
    std::vector<double> out(N_out + 1, 0.0);
    for (int n = 0; n <= N_out; ++n) {
        double acc = 0.0;
        for (int j = -N; j <= N; ++j) acc += at(j) * at(n - j);
        out[n] = acc;
    }
    return out;
}

} // namespace

double TravelingWave::eval(double z) const {
    double v = cosine_coeffs.empty() ? 0.0 : cosine_coeffs[0];
    for (int n = 1; n <= harmonics(); ++n) v += 2.0 * cosine_coeffs[n] * std::cos(n * z);
    return v;
}

std::vector<std::pair<int, double>> resonant_wavenumbers(const DispersionModel& model,
                                                         int N_max) {
    if (N_max < 2) throw DomainError("resonant_wavenumbers: N_max must be >= 2");
    std::vector<std::pair<int, double>> out;
    if (model.family != Family::CapillaryGravity) return out;
    if (model.tau <= 0.0 || model.tau >= 1.0 / 3.0) return out;

    // m(k) - m(Nk) is positive for small k and goes negative as m turns
    // around its single minimum; scan a log grid for the bracket.
    constexpr int kGrid = 600;
    const double lo = 1e-5, hi = 100.0;
    for (int N = 2; N <= N_max; ++N) {
        auto f = [&](double k) { return symbol(model, k) - symbol(model, N * k); };
        double kprev = lo;
        double fprev = f(kprev);
        double root = -1.0;
        for (int i = 1; i <= kGrid; ++i) {
            const double k = lo * std::pow(hi / lo, static_cast<double>(i) / kGrid);
            const double fk = f(k);
            if (fprev > 0.0 && fk <= 0.0) {
                root = bisect(f, kprev, k, 1e-14 * k);
                break;
            }
            kprev = k;
            fprev = fk;
        }
        if (root < 0.0) {
            std::ostringstream msg;
            msg << "resonant_wavenumbers: no bracket for N=" << N << " with tau=" << model.tau
                << " on k in [" << lo << ", " << hi << "] (" << kGrid << "-point log grid)";
            throw NumericalError(msg.str());
        }
        out.emplace_back(N, root);
    }
    return out;
}

SigmaQuery in_sigma(const DispersionModel& model, double k, double guard, int N_max) {
    if (k <= 0.0) throw DomainError("in_sigma: k must be positive");
    SigmaQuery q{true, std::numeric_limits<double>::infinity(), 0, 0.0};
    for (const auto& [N, kN] : resonant_wavenumbers(model, N_max)) {
        const double dist = std::abs(k - kN);
        if (dist < q.distance) {
            q.distance = dist;
            q.nearest_N = N;
            q.nearest_kN = kN;
        }
    }
    q.in_sigma = q.distance > guard;
    return q;
}

namespace {

void require_in_sigma(const DispersionModel& model, double k) {
    const SigmaQuery q = in_sigma(model, k);
    if (!q.in_sigma) {
        std::ostringstream msg;
        msg << "wave number k=" << k << " is resonant: m(k)=m(" << q.nearest_N
            << "k) at k_" << q.nearest_N << "=" << q.nearest_kN;
        throw ResonanceError(msg.str());
    }
}

} // namespace

TravelingWave expansion_wave(const DispersionModel& model, double k, double a, double b) {
    if (k <= 0.0) throw DomainError("expansion_wave: k must be positive");
    require_in_sigma(model, k);

    const double m0 = symbol(model, 0.0);
    const double mk = symbol(model, k);
    const double m2k = symbol(model, 2.0 * k);
    const double d0 = mk - m0;
    const double d2 = mk - m2k;
    if (a != 0.0) {
        if (std::abs(d0) < kDenomGuard)
            throw ResonanceError("expansion_wave: m(k)=m(0), long-wave resonance");
        if (std::abs(d2) < kDenomGuard)
            throw ResonanceError("expansion_wave: m(k)=m(2k), second-harmonic resonance");
    }

    TravelingWave w;
    w.k = k;
    w.a = a;
    w.b = b;
    w.source = WaveSource::Expansion;
    w.cosine_coeffs.assign(3, 0.0);
    const double w0b = -d0 * (b - b * b);                        // (m(0)-m(k))(b - b^2)
    const double c0b = mk - 2.0 * d0 * (b - 3.0 * b * b);        // m(k) + 2(m(0)-m(k))(b - 3b^2)
    w.cosine_coeffs[0] = w0b + (a == 0.0 ? 0.0 : a * a / (2.0 * d0));
    w.cosine_coeffs[1] = a / 2.0;
    w.cosine_coeffs[2] = a == 0.0 ? 0.0 : a * a / (4.0 * d2);
    w.c = c0b + (a == 0.0 ? 0.0 : a * a * (1.0 / d0 + 0.5 / d2));
    return w;
}

TravelingWave galilean_shift(const DispersionModel& model, const TravelingWave& wave,
                             double v) {
    // w -> w + v leaves the quadrature invariant with c -> c + 2v and
    // B = (m(0)-c)^2 b -> B + (m(0)-c) v - v^2.
    const double m0 = symbol(model, 0.0);
    TravelingWave out = wave;
    if (out.cosine_coeffs.empty()) out.cosine_coeffs.assign(1, 0.0);
    out.cosine_coeffs[0] += v;
    out.c = wave.c + 2.0 * v;
    const double B = (m0 - wave.c) * (m0 - wave.c) * wave.b;
    const double Bnew = B + (m0 - wave.c) * v - v * v;
    const double denom = (m0 - out.c) * (m0 - out.c);
    if (denom < kDenomGuard * kDenomGuard && Bnew != 0.0)
        throw NumericalError("galilean_shift: shifted speed coincides with m(0), "
                             "Bernoulli parameter undefined");
    out.b = denom == 0.0 ? 0.0 : Bnew / denom;
    return out;
}

double residual(const DispersionModel& model, const TravelingWave& wave) {
    const int N = std::max(wave.harmonics(), 1);
    const int M = 4 * std::max(N, 8);
    const double m0 = symbol(model, 0.0);
    const double B = (m0 - wave.c) * (m0 - wave.c) * wave.b;

    std::vector<double> mk(N + 1);
    for (int n = 0; n <= N; ++n) mk[n] = symbol(model, wave.k * n);

    double worst = 0.0;
    for (int j = 0; j < M; ++j) {
        const double z = 2.0 * std::numbers::pi * j / M;
        double w = wave.coeff(0);
        double Mw = mk[0] * wave.coeff(0);
        for (int n = 1; n <= N; ++n) {
            const double cn = 2.0 * wave.coeff(n) * std::cos(n * z);
            w += cn;
            Mw += mk[n] * cn;
        }
        worst = std::max(worst, std::abs(Mw - wave.c * w + w * w - B));
    }
    return worst;
}

TravelingWave refine_wave(const DispersionModel& model, const TravelingWave& seed,
                          int N_F, double tol, int* iterations) {
    if (N_F < 8) throw DomainError("refine_wave: N_F must be >= 8");
    if (seed.b != 0.0) throw DomainError("refine_wave: seed must have b = 0");
    require_in_sigma(model, seed.k);

    const double k = seed.k;
    const double a = seed.a;
    TravelingWave w = seed;
    w.source = WaveSource::Refined;
    w.cosine_coeffs.resize(N_F + 1, 0.0);
    w.cosine_coeffs[1] = a / 2.0;  // amplitude normalization, held fixed

    if (iterations) *iterations = 0;
    if (residual(model, w) <= tol) return w;

    std::vector<double> mk(N_F + 1);
    for (int n = 0; n <= N_F; ++n) mk[n] = symbol(model, k * n);

    // Unknowns: w0, w2..wN, c. Equations: Galerkin modes 0..N of
    // (m(kn) - c) w_n + (w^2)_n = 0.
    const int dim = N_F + 1;
    auto unknown_col = [&](int n) { return n == 0 ? 0 : n - 1; };  // skip w1
    Eigen::MatrixXd J(dim, dim);
    Eigen::VectorXd G(dim);

    double best = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= 50; ++it) {
        const std::vector<double> sq = square_coeffs(w.cosine_coeffs, N_F);
        for (int n = 0; n <= N_F; ++n) G(n) = (mk[n] - w.c) * w.cosine_coeffs[n] + sq[n];

        J.setZero();
        for (int n = 0; n <= N_F; ++n) {
            // d/dw0
            J(n, unknown_col(0)) = (n == 0 ? mk[0] - w.c : 0.0) + 2.0 * w.coeff(n);
            // d/dwp, p >= 2
            for (int p = 2; p <= N_F; ++p) {
                double v = 2.0 * (w.coeff(n - p) + (n + p <= N_F ? w.coeff(n + p) : 0.0));
                if (n == p) v += mk[n] - w.c;
                J(n, unknown_col(p)) = v;
            }
            // d/dc
            J(n, dim - 1) = -w.cosine_coeffs[n];
        }

        const Eigen::VectorXd step = J.partialPivLu().solve(G);
        if (!step.allFinite())
            throw ConvergenceError("refine_wave: Newton step is not finite (singular Jacobian?)");
        w.cosine_coeffs[0] -= step(unknown_col(0));
        for (int p = 2; p <= N_F; ++p) w.cosine_coeffs[p] -= step(unknown_col(p));
        w.c -= step(dim - 1);

        const double res = residual(model, w);
        if (iterations) *iterations = it;
        if (res <= tol) return w;
        if (res > 10.0 * best && res > 1.0) throw ConvergenceError("refine_wave: residual diverging");
        best = std::min(best, res);
    }
    throw ConvergenceError("refine_wave: no convergence within 50 Newton steps");
}

} // namespace whitham

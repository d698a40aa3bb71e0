#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "floquet.hpp"
#include "oracles.hpp"
#include "stability.hpp"

using namespace whitham;

namespace {

// Sorted by imaginary part; the operators here have (near-)imaginary spectra.
std::vector<std::complex<double>> sorted_by_imag(std::vector<std::complex<double>> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.imag() != b.imag() ? a.imag() < b.imag() : a.real() < b.real();
    });
    return v;
}

} // namespace

TEST_CASE("bloch matrix at a = 0 is diagonal with the unmodulated symbols") {
    const auto g = DispersionModel::gravity();
    const double k = 1.3, xi = 0.17;
    const int N_F = 6;
    auto flat = expansion_wave(g, k, 0.0, 0.0);
    const auto A = bloch_matrix(g, flat, xi, N_F);
    const auto closed = unmodulated_spectrum(g, k, xi, N_F);
    for (int m = -N_F; m <= N_F; ++m) {
        for (int n = -N_F; n <= N_F; ++n) {
            const auto e = A(m + N_F, n + N_F);
            if (m == n)
                CHECK(std::abs(e - closed[m + N_F]) < 1e-14);
            else
                CHECK(std::abs(e) == 0.0);
        }
    }
}

TEST_CASE("eigensolve reproduces the closed-form unmodulated spectrum") {
    const auto g = DispersionModel::gravity();
    std::mt19937 rng(20260826);
    std::uniform_real_distribution<double> kd(0.2, 5.0), xid(-0.5, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        const double k = kd(rng), xi = xid(rng);
        auto flat = expansion_wave(g, k, 0.0, 0.0);
        const auto spec = bloch_spectrum(g, flat, xi, 8, 1.0);
        const auto got = sorted_by_imag(spec.eigenvalues);
        const auto want = sorted_by_imag(unmodulated_spectrum(g, k, xi, 8));
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-10);
    }
}

TEST_CASE("xi = 0, a = 0: zero is a triple eigenvalue") {
    const auto g = DispersionModel::gravity();
    const auto want = unmodulated_spectrum(g, 1.0, 0.0, 10);
    CHECK(std::count_if(want.begin(), want.end(),
                        [](const std::complex<double>& l) { return std::abs(l) < 1e-12; }) == 3);
    auto flat = expansion_wave(g, 1.0, 0.0, 0.0);
    const auto spec = bloch_spectrum(g, flat, 0.0, 10, 1.0);
    CHECK(std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                        [](const std::complex<double>& l) { return std::abs(l) < 1e-10; }) == 3);
}

TEST_CASE("spectrum is symmetric under conjugation across +/- xi") {
    const auto g = DispersionModel::gravity();
    auto wave = refine_wave(g, expansion_wave(g, 2.0, 0.01, 0.0), 16, 1e-12);
    const double xi = 0.07;
    auto sp = sorted_by_imag(bloch_spectrum(g, wave, xi, 20).eigenvalues);
    auto sm = bloch_spectrum(g, wave, -xi, 20).eigenvalues;
    for (auto& l : sm) l = std::conj(l);
    auto smc = sorted_by_imag(sm);
    for (std::size_t i = 0; i < sp.size(); ++i) CHECK(std::abs(sp[i] - smc[i]) < 1e-8);
}

TEST_CASE("small-amplitude wave keeps three eigenvalues near the origin at xi = 0") {
    const auto g = DispersionModel::gravity();
    const double a = 0.01;
    auto wave = refine_wave(g, expansion_wave(g, 1.0, a, 0.0), 16, 1e-12);
    const auto spec = bloch_spectrum(g, wave, 0.0, 20);
    CHECK(spec.r_origin == doctest::Approx(10.0 * a).epsilon(1e-15));
    CHECK(std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(), [&](const auto& l) {
              return std::abs(l) <= spec.r_origin;
          }) >= 3);
}

TEST_CASE("kernel basis: structure and annihilation at a = 0") {
    const auto g = DispersionModel::gravity();
    const double k = 1.0;
    const auto b0 = kernel_basis(g, k, 0.0, 8);
    const double d2 = symbol(g, k) - symbol(g, 2.0 * k);
    CHECK(std::abs(b0.phi1(8 + 1) - 0.5) < 1e-15);
    CHECK(std::abs(b0.phi1(8 + 0) + 0.5 / d2) < 1e-15);
    CHECK(std::abs(b0.phi1(8 + 2)) == 0.0);  // a = 0 kills the second harmonic
    CHECK(std::abs(b0.phi2(8 + 1) - std::complex<double>(0.0, -0.5)) < 1e-15);
    CHECK(std::abs(b0.phi3(8 + 0) - 1.0) < 1e-15);

    // At a = 0 the operator annihilates all three exactly.
    auto flat = expansion_wave(g, k, 0.0, 0.0);
    const auto A = bloch_matrix(g, flat, 0.0, 8);
    CHECK((A * b0.phi1).norm() < 1e-14);
    CHECK((A * b0.phi2).norm() < 1e-14);
    CHECK((A * b0.phi3).norm() < 1e-14);
}

// phi1 carries an O(1) constant component, so applying the linearized
// operator leaves an O(a) remainder (the advection term acting on the
// constant); phi2 has no such component and its remainder is O(a^2).
TEST_CASE("kernel basis residuals decay at the expected order in a") {
    const auto g = DispersionModel::gravity();
    const double k = 1.0;
    std::vector<double> amps = {0.02, 0.01, 0.005}, r1, r2;
    for (double a : amps) {
        auto wave = refine_wave(g, expansion_wave(g, k, a, 0.0), 14, 1e-13);
        const auto A = bloch_matrix(g, wave, 0.0, 16);
        const auto b = kernel_basis(g, k, a, 16);
        r1.push_back((A * b.phi1).norm());
        r2.push_back((A * b.phi2).norm());
    }
    CHECK(oracle::loglog_slope(amps, r1) >= 0.9);
    CHECK(oracle::loglog_slope(amps, r2) >= 1.9);
}

TEST_CASE("kernel basis input validation") {
    const auto cg = DispersionModel::capillary_gravity(0.1);
    const double k2 = resonant_wavenumbers(cg, 2)[0].second;
    CHECK_THROWS_AS(kernel_basis(cg, k2, 0.01), ResonanceError);
    CHECK_THROWS_AS(kernel_basis(DispersionModel::gravity(), -1.0, 0.01), DomainError);
    CHECK_THROWS_AS(kernel_basis(DispersionModel::gravity(), 1.0, 0.01, 1), DimensionError);
}

TEST_CASE("bloch matrix truncation must cover the wave harmonics") {
    const auto g = DispersionModel::gravity();
    auto wave = refine_wave(g, expansion_wave(g, 1.0, 0.01, 0.0), 12, 1e-12);
    CHECK_THROWS_AS(bloch_matrix(g, wave, 0.0, 3), DimensionError);
    CHECK_NOTHROW(bloch_matrix(g, wave, 0.0, 14));
}

TEST_CASE("growth check agrees with the index on benchmark carriers") {
    const auto g = DispersionModel::gravity();
    const std::vector<double> xi = {0.025, 0.05, 0.1};

    auto stable = mi_growth_check(g, 0.5, 0.01, xi, 32);
    CHECK(stable.predicted == Verdict::Stable);
    CHECK(stable.observed == Verdict::Stable);
    CHECK(stable.agree);
    CHECK_FALSE(stable.indeterminate);
    CHECK(stable.max_growth < 1e-8);

    auto unstable = mi_growth_check(g, 2.0, 0.01, xi, 32);
    CHECK(unstable.predicted == Verdict::Unstable);
    CHECK(unstable.observed == Verdict::Unstable);
    CHECK(unstable.agree);
    CHECK(unstable.max_growth > 1e-6);

    CHECK_THROWS_AS(mi_growth_check(g, 1.0, 0.5, xi, 32), DomainError);
    CHECK_THROWS_AS(mi_growth_check(g, 1.0, 0.01, {}, 32), DomainError);
}

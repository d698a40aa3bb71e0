// End-to-end acceptance suite. Each numbered check prints a single PASS/FAIL
// line with its runtime; the process exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "diagrams.hpp"
#include "floquet.hpp"
#include "stability.hpp"
#include "waves.hpp"

using namespace whitham;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++g_failures;
    std::printf("%s  %d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

std::string fmtnum(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// A growth-check case: model plus carrier wave number.
struct Case {
    DispersionModel model;
    double k;
    std::string label;
};

// Pick a carrier inside (lo, hi) that stays clear of the supplied avoid list
// (mechanism roots and low-order resonances) and of the bifurcation-set
// guard band. High-order resonances k_N carry O(a^N) weight and need only the
// default guard.
double pick_carrier(const DispersionModel& model, double lo, double hi,
                    const std::vector<double>& avoid) {
    for (int j = 0; j <= 20; ++j) {
        // Midpoint first, then alternate outward.
        const double frac = 0.5 + (j % 2 ? 1 : -1) * 0.02 * ((j + 1) / 2);
        const double k = lo + (hi - lo) * frac;
        if (k <= lo || k >= hi) continue;
        bool clear = true;
        for (double r : avoid)
            if (std::abs(k - r) < 0.05) clear = false;
        if (!clear) continue;
        if (!in_sigma(model, k, 1e-3).in_sigma) continue;
        return k;
    }
    throw NumericalError("pick_carrier: no admissible carrier in the interval");
}

} // namespace

int main() {
    criterion(1, "gravity critical wave number 1.145 +/- 0.002", 1.0, [](std::string& d) {
        const auto roots = critical_wavenumbers(DispersionModel::gravity(), 0.1, 10.0, 2000);
        d = "roots=" + std::to_string(roots.size()) +
            (roots.empty() ? "" : ", z=" + fmtnum(roots[0].first));
        return roots.size() == 1 && roots[0].second == Mechanism::BFResonancePlus &&
               std::abs(roots[0].first - 1.145) <= 0.002;
    });

    criterion(2, "vorticity critical curve: limit, monotonicity, lower bound", 5.0,
              [](std::string& d) {
                  const std::vector<double> samples = {-5.0, -2.0, 0.0, 2.0, 5.0, 20.0};
                  const auto plus = vorticity_critical_curve(Branch::Plus, samples);
                  bool ok = true;
                  for (std::size_t i = 0; i < plus.size(); ++i) {
                      if (plus[i].unbounded) ok = false;
                      if (i > 0 && !(plus[i].z_c < plus[i - 1].z_c)) ok = false;
                  }
                  const double zc20 = plus.back().z_c;
                  if (std::abs(zc20 - 0.957) > 0.02 * 0.957) ok = false;
                  // Lower bound 0.956 on both branches over a wide sample.
                  const std::vector<double> wide = {-20, -10, -5, -2, 0, 2, 5, 10, 20};
                  for (Branch b : {Branch::Plus, Branch::Minus})
                      for (const auto& pt : vorticity_critical_curve(b, wide))
                          if (pt.unbounded || pt.z_c <= 0.956) ok = false;
                  d = "z_c(20)=" + fmtnum(zc20);
                  return ok;
              });

    criterion(3, "deep-water stable band endpoints within 5%", 5.0, [](std::string& d) {
        const auto band = deep_water_band();
        const double lo_ref = 2.0 / std::sqrt(3.0) - 1.0, hi_ref = 0.5;
        d = "band=(" + fmtnum(band.lower) + ", " + fmtnum(band.upper) + ")";
        return std::abs(band.lower - lo_ref) <= 0.05 * lo_ref &&
               std::abs(band.upper - hi_ref) <= 0.05 * hi_ref;
    });

    criterion(4, "diagram asymptotes at x = 30 (300x300)", 30.0, [](std::string& d) {
        const auto curves = capillary_diagram({0.05, 30.0}, {0.01, 1.2}, 300);
        const double cell = (30.0 - 0.05) / 299.0;
        auto tail_y = [&](Mechanism mech) {
            double best_x = -1.0, best_y = 0.0;
            for (const auto& c : curves) {
                if (c.mechanism != mech || c.kind != CurveKind::MechanismLevelSet) continue;
                for (const auto& [x, y] : c.points)
                    if (x > best_x) {
                        best_x = x;
                        best_y = y;
                    }
            }
            if (best_x < 30.0 - 1.5 * cell) throw NumericalError("curve does not reach x = 30");
            return best_y;
        };
        const double y_sh = tail_y(Mechanism::SecondHarmonic);
        const double y_gv = tail_y(Mechanism::GroupVelExtremum);
        const double sh_ref = 1.0 / std::sqrt(2.0);
        const double gv_ref = std::sqrt(2.0 / std::sqrt(3.0) - 1.0);
        d = "second_harmonic y=" + fmtnum(y_sh) + " (ref " + fmtnum(sh_ref) +
            "), group_vel y=" + fmtnum(y_gv) + " (ref " + fmtnum(gv_ref) + ")";
        return std::abs(y_sh - sh_ref) <= 0.02 * sh_ref &&
               std::abs(y_gv - gv_ref) <= 0.02 * gv_ref;
    });

    criterion(5, "dispersive mechanisms absent for gravity, tau=0.5, vorticity", 10.0,
              [](std::string& d) {
                  std::vector<DispersionModel> models = {DispersionModel::gravity(),
                                                         DispersionModel::capillary_gravity(0.5)};
                  for (double varpi : {-5.0, 0.0, 5.0})
                      for (Branch b : {Branch::Plus, Branch::Minus})
                          models.push_back(DispersionModel::constant_vorticity(varpi, b));

                  const int n = 10000;
                  const double lo = 1e-3, hi = 1e3;
                  int total_flips = 0;
                  for (const auto& m : models) {
                      const double m0 = symbol(m, 0.0);
                      const std::function<double(double)> fns[] = {
                          [&](double z) { return group_velocity_deriv(m, z); },
                          [&](double z) { return group_velocity(m, z) - m0; },
                          [&](double z) { return symbol(m, z) - symbol(m, 2.0 * z); }};
                      for (const auto& f : fns) {
                          double prev = f(lo);
                          for (int i = 1; i < n; ++i) {
                              // Log-spaced scan across six decades.
                              const double z =
                                  lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
                              const double v = f(z);
                              if ((prev > 0 && v < 0) || (prev < 0 && v > 0)) ++total_flips;
                              if (v != 0.0) prev = v;
                          }
                      }
                  }
                  d = "sign changes=" + std::to_string(total_flips);
                  return total_flips == 0;
              });

    criterion(6, "index vs spectral growth on a 16-case grid, truncation-stable", 120.0,
              [](std::string& d) {
                  std::vector<Case> cases;
                  const auto g = DispersionModel::gravity();
                  for (double k : {0.5, 0.8, 1.5, 2.0}) cases.push_back({g, k, "gravity"});

                  const auto cg1 = DispersionModel::capillary_gravity(0.1);
                  auto roots1 = critical_wavenumbers(cg1, 0.05, 30.0, 4000);
                  std::vector<double> edges = {0.05};
                  for (const auto& [z, mech] : roots1) edges.push_back(z);
                  edges.push_back(30.0);
                  std::vector<double> avoid(edges.begin() + 1, edges.end() - 1);
                  for (const auto& [N, kN] : resonant_wavenumbers(cg1, 6))
                      avoid.push_back(kN);
                  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
                      cases.push_back({cg1, pick_carrier(cg1, edges[i], edges[i + 1], avoid),
                                       "tau=0.1"});

                  const auto cg5 = DispersionModel::capillary_gravity(0.5);
                  const double zc5 = critical_wavenumbers(cg5, 0.05, 50.0, 4000)[0].first;
                  cases.push_back({cg5, zc5 - 0.7, "tau=0.5"});
                  cases.push_back({cg5, zc5 + 0.7, "tau=0.5"});

                  for (double varpi : {3.0, -3.0}) {
                      const auto vo = DispersionModel::constant_vorticity(varpi, Branch::Plus);
                      const double zc =
                          vorticity_critical_curve(Branch::Plus, {varpi})[0].z_c;
                      cases.push_back({vo, zc - 0.2, "vorticity"});
                      cases.push_back({vo, zc + 0.3, "vorticity"});
                  }

                  const std::vector<double> xi = {0.025, 0.05, 0.1};
                  int agreed = 0, stable_trunc = 0;
                  std::string first_bad;
                  for (const auto& c : cases) {
                      const auto g32 = mi_growth_check(c.model, c.k, 0.01, xi, 32);
                      const auto g64 = mi_growth_check(c.model, c.k, 0.01, xi, 64);
                      const bool agree = g32.agree && g64.agree &&
                                         g32.predicted == g64.predicted &&
                                         g32.observed == g64.observed;
                      const double hi = std::max(g32.max_growth, g64.max_growth);
                      const bool trunc_ok =
                          hi <= 1e-10 ||
                          std::abs(g64.max_growth - g32.max_growth) <= 0.01 * hi;
                      if (agree) ++agreed;
                      if (trunc_ok) ++stable_trunc;
                      if ((!agree || !trunc_ok) && first_bad.empty())
                          first_bad = c.label + " k=" + fmtnum(c.k);
                  }
                  d = std::to_string(cases.size()) + " cases, agree=" +
                      std::to_string(agreed) + ", truncation-stable=" +
                      std::to_string(stable_trunc) +
                      (first_bad.empty() ? "" : ", first failure: " + first_bad);
                  return cases.size() >= 12 &&
                         agreed == static_cast<int>(cases.size()) &&
                         stable_trunc == static_cast<int>(cases.size());
              });

    criterion(7, "unmodulated spectrum exact to 1e-10; triple kernel at xi = 0", 10.0,
              [](std::string& d) {
                  const auto g = DispersionModel::gravity();
                  std::mt19937 rng(0x5eed);
                  std::uniform_real_distribution<double> kd(0.2, 5.0), xid(-0.5, 0.5);
                  double worst = 0.0;
                  for (int trial = 0; trial < 20; ++trial) {
                      const double k = kd(rng), xi = xid(rng);
                      const auto flat = expansion_wave(g, k, 0.0, 0.0);
                      const auto spec = bloch_spectrum(g, flat, xi, 8, 1.0);
                      const auto closed = unmodulated_spectrum(g, k, xi, 8);
                      for (const auto& lambda : spec.eigenvalues) {
                          double best = 1e300;
                          for (const auto& mu : closed)
                              best = std::min(best, std::abs(lambda - mu));
                          worst = std::max(worst, best);
                      }
                  }
                  const auto flat = expansion_wave(g, 1.0, 0.0, 0.0);
                  const auto at0 = bloch_spectrum(g, flat, 0.0, 10, 1.0);
                  const long zeros = std::count_if(
                      at0.eigenvalues.begin(), at0.eigenvalues.end(),
                      [](const std::complex<double>& l) { return std::abs(l) < 1e-10; });
                  d = "worst eigenvalue error=" + fmtnum(worst) +
                      ", zero eigenvalues=" + std::to_string(zeros);
                  return worst <= 1e-10 && zeros == 3;
              });

    criterion(8, "refined vs expansion speed decays with slope >= 2.9", 30.0,
              [](std::string& d) {
                  const std::vector<double> amps = {0.04, 0.02, 0.01};
                  auto slope_at = [&](const DispersionModel& m, double k) {
                      std::vector<double> errs;
                      for (double a : amps) {
                          const auto e = expansion_wave(m, k, a, 0.0);
                          const auto r = refine_wave(m, e, 48, 1e-13);
                          errs.push_back(std::abs(r.c - e.c));
                      }
                      return std::log(errs.front() / errs.back()) /
                             std::log(amps.front() / amps.back());
                  };
                  const double s1 = slope_at(DispersionModel::gravity(), 1.0);
                  const double s2 = slope_at(DispersionModel::capillary_gravity(0.1), 3.0);
                  d = "slopes: gravity k=1 -> " + fmtnum(s1) + ", tau=0.1 k=3 -> " + fmtnum(s2);
                  return s1 >= 2.9 && s2 >= 2.9;
              });

    criterion(9, "branch identities to 1e-12; Wilton root matches resonance to 1e-8", 5.0,
              [](std::string& d) {
                  // Vorticity identities, 1000 sampled (z, varpi) pairs:
                  //   m_minus(z; w)          = m_plus(z; -w)
                  //   Delta_BF_minus(z; w)   = -Delta_BF_plus(z; -w)
                  //   Delta_MI_minus(z; w)   = Delta_MI_plus(z; -w)
                  double worst = 0.0;
                  int points = 0;
                  for (int i = 0; i < 40; ++i) {
                      const double varpi = -10.0 + 20.0 * i / 39.0;
                      const auto minus = DispersionModel::constant_vorticity(varpi, Branch::Minus);
                      const auto plus = DispersionModel::constant_vorticity(-varpi, Branch::Plus);
                      for (int j = 0; j < 25; ++j) {
                          const double z = 0.05 + 12.0 * j / 24.0;
                          ++points;
                          worst = std::max(worst, std::abs(symbol(minus, z) - symbol(plus, z)));
                          worst = std::max(worst,
                                           std::abs(delta_bf(minus, z) + delta_bf(plus, z)));
                          const auto rm = delta_mi(minus, z);
                          const auto rp = delta_mi(plus, z);
                          if (!rm.second_harmonic_resonant)
                              worst = std::max(worst, std::abs(rm.delta_mi - rp.delta_mi));
                      }
                  }

                  double worst_wilton = 0.0;
                  for (double tau : {0.05, 0.1, 0.2}) {
                      const auto cg = DispersionModel::capillary_gravity(tau);
                      auto bisect_root = [&](const std::function<double(double)>& f) {
                          double lo = 0.1, hi = 20.0;
                          double flo = f(lo);
                          for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
                              const double mid = 0.5 * (lo + hi);
                              const double fm = f(mid);
                              if ((fm > 0) == (flo > 0)) {
                                  lo = mid;
                                  flo = fm;
                              } else {
                                  hi = mid;
                              }
                          }
                          return 0.5 * (lo + hi);
                      };
                      const double zw =
                          bisect_root([&](double z) { return wilton_condition(cg, z); });
                      const double zr = bisect_root(
                          [&](double z) { return symbol(cg, z) - symbol(cg, 2.0 * z); });
                      worst_wilton = std::max(worst_wilton, std::abs(zw - zr));
                  }
                  d = std::to_string(points) + " points, worst identity error=" +
                      fmtnum(worst) + ", worst Wilton mismatch=" + fmtnum(worst_wilton);
                  return points >= 1000 && worst <= 1e-12 && worst_wilton <= 1e-8;
              });

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

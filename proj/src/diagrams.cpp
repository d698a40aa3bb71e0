#include "diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "parallel.hpp"
#include "rootfind.hpp"

namespace whitham {

namespace {

// Sweep chaining of column-scan roots into polylines: a root joins the open
// chain whose tip is within the gap threshold (in grid cells), else it starts
// a new chain.
std::vector<std::vector<std::pair<double, double>>> chain_columns(
    const std::vector<double>& xs, const std::vector<std::vector<double>>& roots_per_column,
    double cell_x, double cell_y, double gap_cells = 3.0) {
    struct Chain {
        std::vector<std::pair<double, double>> pts;
        int last_col;
    };
    std::vector<Chain> open, closed;
    for (int i = 0; i < static_cast<int>(xs.size()); ++i) {
        // Retire chains that fell too far behind.
        for (auto it = open.begin(); it != open.end();) {
            if (i - it->last_col > gap_cells) {
                closed.push_back(std::move(*it));
                it = open.erase(it);
            } else {
                ++it;
            }
        }
        std::vector<bool> taken(open.size(), false);
        for (double y : roots_per_column[i]) {
            int best = -1;
            double best_d = gap_cells;
            for (int c = 0; c < static_cast<int>(open.size()); ++c) {
                if (taken[c]) continue;
                const auto& tip = open[c].pts.back();
                const double d = std::max(std::abs(xs[i] - tip.first) / cell_x,
                                          std::abs(y - tip.second) / cell_y);
                if (d <= best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (best >= 0) {
                open[best].pts.emplace_back(xs[i], y);
                open[best].last_col = i;
                taken[best] = true;
            } else {
                open.push_back(Chain{{{xs[i], y}}, i});
                taken.push_back(true);
            }
        }
    }
    for (auto& c : open) closed.push_back(std::move(c));

    std::vector<std::vector<std::pair<double, double>>> out;
    for (auto& c : closed)
        if (c.pts.size() >= 2) out.push_back(std::move(c.pts));
    return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

} // namespace

std::vector<StabilityCurve> capillary_diagram(std::pair<double, double> z_range,
                                              std::pair<double, double> y_range,
                                              int resolution) {
    if (!(0.0 < z_range.first && z_range.first < z_range.second) || y_range.first < 0.0 ||
        y_range.first >= y_range.second)
        throw DomainError("capillary_diagram: invalid ranges");
    if (resolution < 100) throw DomainError("capillary_diagram: resolution must be >= 100");

    const std::vector<double> xs = linspace(z_range.first, z_range.second, resolution);
    const std::vector<double> ys = linspace(y_range.first, y_range.second, resolution);
    const double cell_x = xs[1] - xs[0];
    const double cell_y = ys[1] - ys[0];

    // Mechanism functions of (z, tau); tau is recovered from the diagram
    // ordinate as (y/x)^2.
    const std::pair<Mechanism, std::function<double(double, double)>> mechanisms[] = {
        {Mechanism::GroupVelExtremum,
         [](double z, double tau) {
             return group_velocity_deriv(DispersionModel::capillary_gravity(tau), z);
         }},
        {Mechanism::LongShortResonance,
         [](double z, double tau) {
             return group_velocity(DispersionModel::capillary_gravity(tau), z) - 1.0;
         }},
        {Mechanism::SecondHarmonic,
         [](double z, double tau) {
             const DispersionModel m = DispersionModel::capillary_gravity(tau);
             return symbol(m, z) - symbol(m, 2.0 * z);
         }},
        {Mechanism::BFResonancePlus,
         [](double z, double tau) {
             return delta_bf(DispersionModel::capillary_gravity(tau), z);
         }},
    };

    std::vector<StabilityCurve> curves;
    for (const auto& [mech, F] : mechanisms) {
        std::vector<std::vector<double>> roots(resolution);
        parallel_for(resolution, [&](int i) {
            const double z = xs[i];
            auto h = [&](double y) { return F(z, (y / z) * (y / z)); };
            roots[i] = scan_roots(h, ys.front(), ys.back(), resolution, 1e-13);
        });
        for (auto& pts : chain_columns(xs, roots, cell_x, cell_y))
            curves.push_back(StabilityCurve{DiagramPlane::CapillaryPlane, mech,
                                            CurveKind::MechanismLevelSet, std::move(pts)});
    }

    // Reference line tau = 1/3: y = x / sqrt(3).
    {
        StabilityCurve line{DiagramPlane::CapillaryPlane, Mechanism::SecondHarmonic,
                            CurveKind::CriticalTauLine, {}};
        for (double x : xs) {
            const double y = x / std::sqrt(3.0);
            if (y >= ys.front() && y <= ys.back()) line.points.emplace_back(x, y);
        }
        if (line.points.size() >= 2) curves.push_back(std::move(line));
    }
    // Reference line: gravity-wave root of Delta_BF (vertical).
    {
        const DispersionModel gravity = DispersionModel::gravity();
        const auto roots =
            scan_roots([&](double z) { return delta_bf(gravity, z); }, 0.1, 10.0, 2000, 1e-12);
        if (!roots.empty() && roots[0] >= xs.front() && roots[0] <= xs.back()) {
            StabilityCurve line{DiagramPlane::CapillaryPlane, Mechanism::BFResonancePlus,
                                CurveKind::GravityCriticalLine, {}};
            for (double y : ys) line.points.emplace_back(roots[0], y);
            curves.push_back(std::move(line));
        }
    }
    return curves;
}

std::vector<StabilityCurve> vorticity_diagram(std::pair<double, double> varpi_range,
                                              std::pair<double, double> z_range,
                                              int resolution) {
    if (varpi_range.first >= varpi_range.second || !(0.0 < z_range.first) ||
        z_range.first >= z_range.second)
        throw DomainError("vorticity_diagram: invalid ranges");
    if (resolution < 100) throw DomainError("vorticity_diagram: resolution must be >= 100");

    const std::vector<double> xs = linspace(varpi_range.first, varpi_range.second, resolution);
    const double cell_x = xs[1] - xs[0];
    const double cell_y = (z_range.second - z_range.first) / (resolution - 1);

    // Roots of Delta_BF,+ per column; the minus branch is the reflection
    // varpi -> -varpi of the plus branch.
    auto column_roots = [&](double varpi) {
        const DispersionModel m = DispersionModel::constant_vorticity(varpi, Branch::Plus);
        return scan_roots([&](double z) { return delta_bf(m, z); }, z_range.first,
                          z_range.second, resolution, 1e-13);
    };

    std::vector<std::vector<double>> plus_roots(resolution), minus_roots(resolution);
    parallel_for(resolution, [&](int i) {
        plus_roots[i] = column_roots(xs[i]);
        minus_roots[i] = column_roots(-xs[i]);
    });

    std::vector<StabilityCurve> curves;
    for (auto& pts : chain_columns(xs, plus_roots, cell_x, cell_y))
        curves.push_back(StabilityCurve{DiagramPlane::VorticityPlane, Mechanism::BFResonancePlus,
                                        CurveKind::MechanismLevelSet, std::move(pts)});
    for (auto& pts : chain_columns(xs, minus_roots, cell_x, cell_y))
        curves.push_back(StabilityCurve{DiagramPlane::VorticityPlane, Mechanism::BFResonanceMinus,
                                        CurveKind::MechanismLevelSet, std::move(pts)});
    return curves;
}

PointClassification classify_point(DiagramPlane plane, double x, double y) {
    PointClassification pc{};
    if (plane == DiagramPlane::CapillaryPlane) {
        if (x <= 0.0) throw DomainError("classify_point: kd must be positive");
        const double tau = (y / x) * (y / x);
        pc.verdict = delta_mi(DispersionModel::capillary_gravity(tau), x).verdict;
        pc.has_minus = false;
    } else {
        if (y <= 0.0) throw DomainError("classify_point: kd must be positive");
        pc.verdict =
            delta_mi(DispersionModel::constant_vorticity(x, Branch::Plus), y).verdict;
        pc.verdict_minus =
            delta_mi(DispersionModel::constant_vorticity(x, Branch::Minus), y).verdict;
        pc.has_minus = true;
    }
    return pc;
}

} // namespace whitham

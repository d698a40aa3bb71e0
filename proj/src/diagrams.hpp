#pragma once

#include <utility>
#include <vector>

#include "stability.hpp"
#include "types.hpp"

namespace whitham {

enum class DiagramPlane { CapillaryPlane, VorticityPlane };

// Reference-line curves carried alongside the mechanism curves.
enum class CurveKind {
    MechanismLevelSet,
    CriticalTauLine,      // y = x / sqrt(3), i.e. tau = 1/3
    GravityCriticalLine,  // x = root of Delta_BF at tau = 0
};

struct StabilityCurve {
    DiagramPlane plane;
    Mechanism mechanism;
    CurveKind kind = CurveKind::MechanismLevelSet;
    std::vector<std::pair<double, double>> points;
};

// Mechanism level sets in the (x, y) = (kd, k sqrt(T/g)) plane, traced by
// column-wise sign scans (tau recovered as (y/x)^2), plus the two reference
// lines as annotation curves.
std::vector<StabilityCurve> capillary_diagram(std::pair<double, double> z_range,
                                              std::pair<double, double> y_range,
                                              int resolution);

// Zero-level curves of Delta_BF,+ and Delta_BF,- in the (varpi, kd) plane;
// the minus branch follows from the reflection identity.
std::vector<StabilityCurve> vorticity_diagram(std::pair<double, double> varpi_range,
                                              std::pair<double, double> z_range,
                                              int resolution);

struct PointClassification {
    Verdict verdict;          // capillary plane, or plus branch in the vorticity plane
    Verdict verdict_minus;    // minus branch (vorticity plane only)
    bool has_minus = false;
};

PointClassification classify_point(DiagramPlane plane, double x, double y);

} // namespace whitham

#pragma once

#include <stdexcept>
#include <string>

namespace whitham {

enum class Family { Gravity, CapillaryGravity, ConstantVorticity };
enum class Branch { Plus, Minus };
enum class Verdict { Stable, Unstable, Boundary, Degenerate };

// Sign-change mechanisms of the instability index.
enum class Mechanism {
    GroupVelExtremum,    // (z m(z))'' = 0
    LongShortResonance,  // (z m(z))' = m(0)
    SecondHarmonic,      // m(z) = m(2z)
    BFResonancePlus,     // Delta_BF = 0 (plus branch)
    BFResonanceMinus     // Delta_BF = 0 (minus branch, vorticity plane)
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ResonanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace whitham

#pragma once

#include <stdexcept>
#include <string>

namespace lanemden {

// Adaptive step controller underflowed the step size.
struct StepFailure : std::runtime_error {
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

// The requested number of zeros was not found before the integration horizon.
struct NotBracketed : std::runtime_error {
    explicit NotBracketed(const std::string& what) : std::runtime_error(what) {}
};

// The bracket [-C, 0) for the weighted eigenvalue contains no sign change.
struct NoNegativeEigenvalue : std::runtime_error {
    explicit NoNegativeEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

// beta1 >= beta2 passed where beta1 < beta2 < 0 is required.
struct InvalidOrdering : std::runtime_error {
    explicit InvalidOrdering(const std::string& what) : std::runtime_error(what) {}
};

// Re-evaluation flipped an endpoint sign during crossing refinement.
struct LostBracket : std::runtime_error {
    explicit LostBracket(const std::string& what) : std::runtime_error(what) {}
};

// Newton converged back to the radial solution during branch switching.
struct CollapsedToRadial : std::runtime_error {
    explicit CollapsedToRadial(const std::string& what) : std::runtime_error(what) {}
};

// The polar evaluation grid cannot separate nodal components.
struct UnresolvedNodalSet : std::runtime_error {
    explicit UnresolvedNodalSet(const std::string& what) : std::runtime_error(what) {}
};

// Radial solver failed at an extreme exponent during a sweep.
struct ProfileFailure : std::runtime_error {
    explicit ProfileFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lanemden

#pragma once

#include <stdexcept>
#include <string>

namespace rfelm {

// Requested (activation, weight law) pair has no closed-form kernel.
// CLI maps this to exit code 2.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Finite-size regime outside the validity of the deterministic equivalents
// (e.g. 1 - (1/n)tr(Psi Qbar)^2 <= 0). CLI maps this to exit code 3.
struct stability_error : std::runtime_error {
    explicit stability_error(const std::string& what) : std::runtime_error(what) {}
};

// Fixed-point iteration exhausted its budget. CLI maps this to exit code 3.
struct convergence_error : std::runtime_error {
    double last_residual;
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what), last_residual(residual) {}
};

}  // namespace rfelm

#pragma once

#include <stdexcept>
#include <string>

namespace okbody {

// Validation failures: bad specs, incompatible parameters, precondition
// violations. The CLI maps these to exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Computational failures that may succeed with different resources
// (larger truncation, higher degree cap). Mapped to exit code 3.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationExhausted : ComputeError {
    int truncation;
    explicit TruncationExhausted(int t)
        : ComputeError("truncation exhausted at order " + std::to_string(t) +
                       "; retry with a larger truncation"),
          truncation(t) {}
};

struct DegreeCapUnstable : ComputeError {
    int cap;
    explicit DegreeCapUnstable(int d)
        : ComputeError("degree cap unstable: value count changed between degree " +
                       std::to_string(d) + " and " + std::to_string(d + 2)),
          cap(d) {}
};

struct NonTerminationGuard : ComputeError {
    explicit NonTerminationGuard(const std::string& what) : ComputeError(what) {}
};

} // namespace okbody

#pragma once

#include <stdexcept>
#include <string>

namespace dense23 {

// No cylinder of the requested base/order fits inside the outer cylinder.
// Reaching this from the construction path is a logic error: the margins
// chosen by min_inner_order guarantee containment.
struct NotContainable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration or brute-force count would exceed the caller's budget.
// `required` is the exact count that would have been needed.
struct CapExceeded : std::runtime_error {
    CapExceeded(std::string what, std::string required_count)
        : std::runtime_error(std::move(what)), required(std::move(required_count)) {}
    std::string required;
};

// A predicted digit occurrence did not match the actual expansion.
struct WitnessFailed : std::runtime_error {
    WitnessFailed(std::string what, long step, int base_)
        : std::runtime_error(std::move(what)), k(step), base(base_) {}
    long k;
    int base;
};

}  // namespace dense23

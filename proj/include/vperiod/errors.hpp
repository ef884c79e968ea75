#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vperiod {

// A request exceeded a desk-scale cap (torus too large, field too large,
// window too small to certify an extension). Carries the largest k for
// which the same request would be feasible, when that is meaningful.
struct FeasibilityError : std::runtime_error {
    explicit FeasibilityError(const std::string& what, std::uint64_t largest_feasible = 0)
        : std::runtime_error(what), largest_feasible_k(largest_feasible) {}
    std::uint64_t largest_feasible_k;
};

}  // namespace vperiod

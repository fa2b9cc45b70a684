#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcx {

// Bad input or violated precondition.  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction grew past the configured cell cap.  The CLI maps this to
// exit code 3.  `stage` names the construction that overflowed.
struct cap_exceeded : std::runtime_error {
    std::string stage;
    cap_exceeded(std::string stage_, const std::string& what)
        : std::runtime_error(what), stage(std::move(stage_)) {}
};

// Default budget for any single constructed object, counted in cells
// (vertices + edges for graphs, faces for complexes, elements for posets).
inline constexpr std::uint64_t default_cell_cap = 5'000'000;

}  // namespace homcx

#pragma once

#include <stdexcept>

namespace pdmosc {

// Thrown when a routine cannot meet its accuracy contract (series regime
// exceeded, quadrature refinement exhausted).
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pdmosc

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pdmosc {

/// Real-valued function sampled on a uniform 1-D grid.
struct GridFunction {
    double x0 = 0.0;  ///< position of the first sample
    double dx = 0.0;  ///< grid spacing
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double x(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
};

GridFunction sample(double x0, double dx, std::size_t n,
                    const std::function<double(double)>& f);

}  // namespace pdmosc

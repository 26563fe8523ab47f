#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace asinb {

enum class Spacing { Uniform, Chebyshev };

/// Sample grid on [start, end]. Both endpoints are always nodes.
/// Chebyshev spacing uses Chebyshev-Lobatto points, which cluster at both ends.
struct GridSpec {
    double start = 0.0;
    double end = 1.0;
    std::size_t count = 2;
    Spacing spacing = Spacing::Uniform;

    /// Throws std::invalid_argument unless start < end and count >= 2.
    void validate() const;

    [[nodiscard]] double node(std::size_t i) const;
    [[nodiscard]] std::vector<double> nodes() const;
    [[nodiscard]] std::string describe() const;
};

[[nodiscard]] GridSpec uniform_grid(double start, double end, std::size_t count);
[[nodiscard]] GridSpec chebyshev_grid(double start, double end, std::size_t count);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] double width() const { return hi - lo; }
};

}  // namespace asinb

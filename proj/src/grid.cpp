#include "arcsin_bounds/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace asinb {

void GridSpec::validate() const {
    if (!(start < end)) {
        throw std::invalid_argument("grid: start must be < end");
    }
    if (count < 2) {
        throw std::invalid_argument("grid: count must be >= 2");
    }
}

double GridSpec::node(std::size_t i) const {
    if (i == 0) return start;
    if (i + 1 >= count) return end;
    const double n = static_cast<double>(count - 1);
    const double k = static_cast<double>(i);
    double x;
    if (spacing == Spacing::Uniform) {
        x = start + (end - start) * (k / n);
    } else {
        const double c = std::cos(std::numbers::pi * k / n);
        x = 0.5 * (start + end) - 0.5 * (end - start) * c;
    }
    // Rounding may step a hair outside the interval.
    if (x < start) x = start;
    if (x > end) x = end;
    return x;
}

std::vector<double> GridSpec::nodes() const {
    validate();
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i) xs[i] = node(i);
    return xs;
}

std::string GridSpec::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << start << ':' << end << ':' << count
       << (spacing == Spacing::Chebyshev ? " chebyshev" : " uniform");
    return os.str();
}

GridSpec uniform_grid(double start, double end, std::size_t count) {
    GridSpec g{start, end, count, Spacing::Uniform};
    g.validate();
    return g;
}

GridSpec chebyshev_grid(double start, double end, std::size_t count) {
    GridSpec g{start, end, count, Spacing::Chebyshev};
    g.validate();
    return g;
}

}  // namespace asinb

#include "arcsin_bounds/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace asinb {

double arcsin_ref(double x) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw std::domain_error("arcsin_ref: x outside [-1, 1]");
    }
    return std::asin(x);
}

namespace {

TwoTerm split(long double v) {
    const auto hi = static_cast<double>(v);
    return {hi, static_cast<double>(v - static_cast<long double>(hi))};
}

TwoTerm refine_nonnegative(double x) {
    constexpr long double half_pi = std::numbers::pi_v<long double> / 2;
    if (x == 1.0) {
        return split(half_pi);
    }
    const long double y0 = std::asin(x);
    long double residual;
    long double slope;
    if (x < 0.9) {
        residual = std::sin(y0) - static_cast<long double>(x);
        slope = std::cos(y0);
    } else {
        // 1 - x is exact for x in [0.5, 1].
        const long double d = half_pi - y0;
        const long double s = std::sin(d / 2);
        residual = static_cast<long double>(1.0 - x) - 2 * s * s;
        slope = std::sin(d);
    }
    return split(y0 - residual / slope);
}

}  // namespace

TwoTerm arcsin_refined(double x) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw std::domain_error("arcsin_refined: x outside [-1, 1]");
    }
    if (x < 0.0) {
        const TwoTerm r = refine_nonnegative(-x);
        return {-r.hi, -r.lo};
    }
    return refine_nonnegative(x);
}

}  // namespace asinb

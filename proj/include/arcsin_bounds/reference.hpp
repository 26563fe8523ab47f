#pragma once

namespace asinb {

/// Baseline reference arc sine: the platform asin, domain-checked.
/// Throws std::domain_error outside [-1, 1].
[[nodiscard]] double arcsin_ref(double x);

/// Unevaluated sum hi + lo approximating a real number beyond double precision.
struct TwoTerm {
    double hi = 0.0;
    double lo = 0.0;

    [[nodiscard]] long double value() const {
        return static_cast<long double>(hi) + static_cast<long double>(lo);
    }
};

/// Refined arc sine: one Newton step on sin(y) - x starting from arcsin_ref(x),
/// with the residual formed in extended precision. Near x = 1 the residual
/// uses sin(y) = 1 - 2 sin^2((pi/2 - y) / 2) so that 1 - x enters exactly.
[[nodiscard]] TwoTerm arcsin_refined(double x);

/// Signature of a reference evaluator accepted by f_alpha and friends.
using ArcsinFn = double (*)(double);

}  // namespace asinb

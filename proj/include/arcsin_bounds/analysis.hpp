#pragma once

#include <cstddef>
#include <vector>

#include "arcsin_bounds/bound_family.hpp"
#include "arcsin_bounds/grid.hpp"
#include "arcsin_bounds/reference.hpp"

namespace asinb {

/// h_alpha(x) = x (alpha + u) / (1 + alpha u) - arcsin x, u = sqrt(1 - x^2).
/// Same sign as f_alpha'(x). Domain [0, 1]; throws std::domain_error when
/// 1 + alpha u vanishes (only possible for alpha <= -1).
[[nodiscard]] double h_alpha(double x, double alpha, ArcsinFn arcsin = arcsin_ref);

/// Unique zero of h_alpha' on (0, 1): the x with alpha u = alpha^2 - 2.
/// alpha must lie in (sqrt2, 2).
[[nodiscard]] double h_alpha_critical_x(double alpha);

/// H_alpha(x) = x (1 + alpha/u) - (alpha + 1/u) arcsin x = x^2 f_alpha'(x),
/// for x in (0, 1).
[[nodiscard]] double H_alpha(double x, double alpha, ArcsinFn arcsin = arcsin_ref);

struct MinimumLocation {
    double alpha = 0.0;
    double x0 = 0.0;
    double u0 = 0.0;  ///< sqrt(1 - x0^2)
    double f_min = 0.0;
    double f_min_closed_form = 0.0;  ///< (alpha + u0)^2 / (1 + alpha u0)
    double lower_coefficient = 0.0;  ///< 4 (1 - 1/alpha^2)
    Interval bracket;                ///< initial bracket [x*, 1]
    int iterations = 0;
};

[[nodiscard]] double minimum_value_closed_form(double alpha, double u0);

/// Interior minimizer of f_alpha for pi/2 < alpha < 2, found by bisection on h_alpha
/// over [h_alpha_critical_x(alpha), 1] down to width tol_x. Throws
/// std::domain_error outside the interior regime and std::runtime_error if the
/// bracket does not straddle a sign change.
[[nodiscard]] MinimumLocation locate_minimum(double alpha, double tol_x = 1e-14);

/// h_x(alpha) = (1 - 1/alpha^2) / (alpha + sqrt(1 - x^2)); x in (0, 1), alpha > 0.
[[nodiscard]] double h_x_of_alpha(double x, double alpha);

/// alpha^3 (alpha + u)^2 h_x'(alpha) = 3 alpha - alpha^3 + 2u.
[[nodiscard]] double h_x_scaled_derivative(double x, double alpha);

/// Bounds on the scaled derivative that hold for every x in (0, 1):
/// alpha (3 - alpha^2) < scaled < 2 + 3 alpha - alpha^3.
struct DerivativeBracket {
    double lower;
    double upper;
};

[[nodiscard]] DerivativeBracket h_x_derivative_bracket(double alpha);

enum class Verdict { ADominates, BDominates, Crossing };

[[nodiscard]] std::string_view to_string(Verdict verdict);

/// Pointwise comparison of two same-side bounds. "a dominates" means a is at
/// least as tight as b (within tol) at every node.
struct DominanceReport {
    BoundId a = BoundId::Optimal;
    BoundId b = BoundId::Optimal;
    Side side = Side::Lower;
    GridSpec grid;
    double tol = 0.0;
    Verdict verdict = Verdict::ADominates;
    std::vector<Interval> crossings;  ///< each brackets a sign change of (a - b)
    double max_gap = 0.0;             ///< max |a - b| over the grid
    double max_gap_x = 0.0;
    std::size_t refined_nodes = 0;    ///< nodes re-evaluated in long double
};

inline constexpr double kCrossingWidth = 1e-10;

/// Grid must lie inside (0, 1). Throws std::invalid_argument on side mismatch.
[[nodiscard]] DominanceReport dominance_scan(BoundId a, BoundId b, const GridSpec& grid,
                                             double tol = 1e-12);

struct TightnessReport {
    BoundId id = BoundId::Optimal;
    GridSpec grid;
    double max_abs_err = 0.0;
    double argmax_x = 0.0;
    double max_rel_err = 0.0;  ///< over nodes with arcsin x > 0
    double argmax_rel_x = 0.0;
};

/// Grid must lie inside [0, 1]. Ties in the maximum go to the smallest x.
[[nodiscard]] TightnessReport tightness_report(BoundId id, const GridSpec& grid,
                                               ArcsinFn arcsin = arcsin_ref);

}  // namespace asinb

#include "arcsin_bounds/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace asinb {

double h_alpha(double x, double alpha, ArcsinFn arcsin) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("h_alpha: x outside [0, 1]");
    }
    const double u = sqrt_one_minus_square(x);
    const double denom = 1.0 + alpha * u;
    if (denom == 0.0) {
        throw std::domain_error("h_alpha: 1 + alpha sqrt(1 - x^2) vanishes");
    }
    return x * (alpha + u) / denom - arcsin(x);
}

double h_alpha_critical_x(double alpha) {
    if (!(alpha > std::sqrt(2.0) && alpha < 2.0)) {
        throw std::domain_error("h_alpha_critical_x: alpha outside (sqrt2, 2)");
    }
    const double r = (alpha * alpha - 2.0) / alpha;
    return sqrt_one_minus_square(r);
}

double H_alpha(double x, double alpha, ArcsinFn arcsin) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("H_alpha: x outside (0, 1)");
    }
    const double u = sqrt_one_minus_square(x);
    return x * (1.0 + alpha / u) - (alpha + 1.0 / u) * arcsin(x);
}

double minimum_value_closed_form(double alpha, double u0) {
    const double s = alpha + u0;
    return s * s / (1.0 + alpha * u0);
}

MinimumLocation locate_minimum(double alpha, double tol_x) {
    if (classify_regime(alpha) != Regime::Interior) {
        throw std::domain_error("locate_minimum: alpha outside (pi/2, 2)");
    }
    if (!(tol_x > 0.0)) {
        throw std::domain_error("locate_minimum: tol_x must be > 0");
    }
    MinimumLocation m;
    m.alpha = alpha;
    m.bracket = {h_alpha_critical_x(alpha), 1.0};

    double lo = m.bracket.lo;
    double hi = m.bracket.hi;
    if (!(h_alpha(lo, alpha) < 0.0 && h_alpha(hi, alpha) > 0.0)) {
        throw std::runtime_error("locate_minimum: h_alpha does not change sign on [x*, 1]");
    }
    while (hi - lo > tol_x) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (h_alpha(mid, alpha) < 0.0 ? lo : hi) = mid;
        ++m.iterations;
    }
    m.x0 = 0.5 * (lo + hi);
    m.u0 = sqrt_one_minus_square(m.x0);
    m.f_min = eval_f_alpha(m.x0, alpha);
    m.f_min_closed_form = minimum_value_closed_form(alpha, m.u0);
    m.lower_coefficient = 4.0 * (1.0 - 1.0 / (alpha * alpha));
    return m;
}

double h_x_of_alpha(double x, double alpha) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("h_x_of_alpha: x outside (0, 1)");
    }
    if (!(alpha > 0.0)) {
        throw std::domain_error("h_x_of_alpha: alpha must be > 0");
    }
    return (1.0 - 1.0 / (alpha * alpha)) / (alpha + sqrt_one_minus_square(x));
}

double h_x_scaled_derivative(double x, double alpha) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("h_x_scaled_derivative: x outside (0, 1)");
    }
    return 3.0 * alpha - alpha * alpha * alpha + 2.0 * sqrt_one_minus_square(x);
}

DerivativeBracket h_x_derivative_bracket(double alpha) {
    const double cubic = 3.0 * alpha - alpha * alpha * alpha;
    return {cubic, 2.0 + cubic};
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::ADominates: return "A_DOMINATES";
        case Verdict::BDominates: return "B_DOMINATES";
        case Verdict::Crossing: return "CROSSING";
    }
    return "unknown";
}

namespace {

// Positive when a is the tighter bound at x.
double tightness_gap(BoundId a, BoundId b, Side side, double x) {
    const double d = eval_bound(a, x) - eval_bound(b, x);
    return side == Side::Lower ? d : -d;
}

long double refined_tightness_gap(BoundId a, BoundId b, Side side, long double x) {
    const long double d = bound_value(a, x) - bound_value(b, x);
    return side == Side::Lower ? d : -d;
}

int banded_sign(long double d, double tol) {
    if (d > tol) return 1;
    if (d < -tol) return -1;
    return 0;
}

}  // namespace

DominanceReport dominance_scan(BoundId a, BoundId b, const GridSpec& grid, double tol) {
    grid.validate();
    if (side_of(a) != side_of(b)) {
        throw std::invalid_argument("dominance_scan: " + std::string(to_string(a)) + " and " +
                                    std::string(to_string(b)) + " bound different sides");
    }
    if (!(grid.start > 0.0 && grid.end < 1.0)) {
        throw std::invalid_argument("dominance_scan: grid must lie inside (0, 1)");
    }
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("dominance_scan: tol must be >= 0");
    }

    DominanceReport r;
    r.a = a;
    r.b = b;
    r.side = side_of(a);
    r.grid = grid;
    r.tol = tol;

    bool any_tighter = false;
    bool any_looser = false;
    int last_sign = 0;
    double last_x = 0.0;

    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.node(i);
        long double d = tightness_gap(a, b, r.side, x);
        if (std::fabs(d) <= tol) {
            d = refined_tightness_gap(a, b, r.side, x);
            ++r.refined_nodes;
        }
        const double gap = static_cast<double>(std::fabs(d));
        if (gap > r.max_gap) {
            r.max_gap = gap;
            r.max_gap_x = x;
        }
        const int s = banded_sign(d, tol);
        if (s == 0) continue;
        (s > 0 ? any_tighter : any_looser) = true;
        if (last_sign != 0 && s != last_sign) {
            double lo = last_x;
            double hi = x;
            while (hi - lo > kCrossingWidth) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const int ms = refined_tightness_gap(a, b, r.side, mid) > 0 ? 1 : -1;
                (ms == last_sign ? lo : hi) = mid;
            }
            r.crossings.push_back({lo, hi});
        }
        last_sign = s;
        last_x = x;
    }

    if (!any_looser) {
        r.verdict = Verdict::ADominates;
    } else if (!any_tighter) {
        r.verdict = Verdict::BDominates;
    } else {
        r.verdict = Verdict::Crossing;
    }
    return r;
}

TightnessReport tightness_report(BoundId id, const GridSpec& grid, ArcsinFn arcsin) {
    grid.validate();
    if (!(grid.start >= 0.0 && grid.end <= 1.0)) {
        throw std::invalid_argument("tightness_report: grid must lie inside [0, 1]");
    }
    TightnessReport r;
    r.id = id;
    r.grid = grid;
    r.argmax_x = grid.start;
    r.argmax_rel_x = grid.start;
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.node(i);
        const double ref = arcsin(x);
        const double err = std::fabs(eval_bound(id, x) - ref);
        if (err > r.max_abs_err) {
            r.max_abs_err = err;
            r.argmax_x = x;
        }
        if (ref > 0.0 && err / ref > r.max_rel_err) {
            r.max_rel_err = err / ref;
            r.argmax_rel_x = x;
        }
    }
    return r;
}

}  // namespace asinb

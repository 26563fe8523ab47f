#include "arcsin_bounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "arcsin_bounds/analysis.hpp"

namespace asinb {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;

bool wants_refinement(Refinement mode, double margin) {
    switch (mode) {
        case Refinement::Always: return true;
        case Refinement::Never: return false;
        case Refinement::Auto: break;
    }
    return margin < kRefineBelow;
}

// Running minimum of margins over grid nodes.
class MarginTracker {
public:
    explicit MarginTracker(VerificationReport& r) : r_(r) {
        r_.min_margin = std::numeric_limits<double>::infinity();
    }

    void observe(double x, double margin) {
        if (margin < r_.min_margin) {
            r_.min_margin = margin;
            r_.worst_x = x;
        }
    }

    void finish() {
        r_.worst_violation = std::max(0.0, -r_.min_margin);
        r_.passed = r_.min_margin >= -r_.tolerance;
    }

private:
    VerificationReport& r_;
};

void require_positive_grid(const GridSpec& grid, const char* what) {
    grid.validate();
    if (!(grid.start >= 0.0 && grid.end <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": grid must lie inside [0, 1]");
    }
}

}  // namespace

VerificationReport verify_enclosure(const AlphaParam& alpha, const GridSpec& grid, double tol,
                                    Refinement refine) {
    require_positive_grid(grid, "verify_enclosure");
    const auto coeffs = enclosure_coefficients(alpha);
    const double a = alpha.value();

    VerificationReport r;
    r.check = "enclosure alpha=" + std::to_string(a) + " (" +
              std::string(to_string(alpha.regime())) + ")";
    r.grid = grid;
    r.tolerance = tol;
    MarginTracker track(r);

    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.node(i);
        const Enclosure e = enclosure_for_alpha(x, alpha);
        const double ref = arcsin_ref(x);
        double margin = std::min(ref - e.lower, e.upper - ref);
        if (wants_refinement(refine, margin)) {
            const long double ref_l = arcsin_refined(x).value();
            const long double lo = family_value<long double>(x, coeffs.lower, a);
            const long double hi = family_value<long double>(x, coeffs.upper, a);
            margin = static_cast<double>(std::min(ref_l - lo, hi - ref_l));
            ++r.refined_nodes;
        }
        track.observe(x, margin);
    }
    track.finish();
    return r;
}

VerificationReport verify_bound(BoundId id, const GridSpec& grid, double tol, Refinement refine) {
    require_positive_grid(grid, "verify_bound");
    const Side side = side_of(id);

    VerificationReport r;
    r.check = "bound " + std::string(to_string(id)) + " (" + std::string(to_string(side)) + ")";
    r.grid = grid;
    r.tolerance = tol;
    MarginTracker track(r);

    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.node(i);
        const double v = eval_bound(id, x);
        const double ref = arcsin_ref(x);
        double margin = side == Side::Lower ? ref - v : v - ref;
        if (wants_refinement(refine, margin)) {
            const long double ref_l = arcsin_refined(x).value();
            const long double v_l = bound_value<long double>(id, x);
            margin = static_cast<double>(side == Side::Lower ? ref_l - v_l : v_l - ref_l);
            ++r.refined_nodes;
        }
        track.observe(x, margin);
    }
    track.finish();
    return r;
}

VerificationReport verify_shafer_chain(const GridSpec& grid) {
    require_positive_grid(grid, "verify_shafer_chain");
    VerificationReport r;
    r.check = "chain shafer-fink-lower < shafer-sqrt-lower < arcsin";
    r.grid = grid;
    r.tolerance = 0.0;
    MarginTracker track(r);

    for (std::size_t i = 0; i < grid.count; ++i) {
        const long double x = grid.node(i);
        const long double outer = bound_value(BoundId::ShaferFinkLower, x);
        const long double middle = bound_value(BoundId::ShaferSqrtLower, x);
        const long double ref = arcsin_refined(grid.node(i)).value();
        track.observe(grid.node(i), static_cast<double>(std::min(middle - outer, ref - middle)));
    }
    track.finish();
    r.passed = r.min_margin > 0.0;
    return r;
}

std::string_view to_string(Pattern pattern) {
    switch (pattern) {
        case Pattern::StrictlyIncreasing: return "strictly-increasing";
        case Pattern::StrictlyDecreasing: return "strictly-decreasing";
        case Pattern::SingleDip: return "single-dip";
        case Pattern::Other: return "other";
    }
    return "unknown";
}

Pattern expected_pattern(double alpha) {
    switch (classify_regime(alpha)) {
        case Regime::Increasing: return Pattern::StrictlyIncreasing;
        case Regime::Decreasing: return Pattern::StrictlyDecreasing;
        case Regime::Interior: break;
    }
    return Pattern::SingleDip;
}

ObservedPattern classify_pattern(const std::vector<double>& values) {
    ObservedPattern out;
    if (values.size() < 2) return out;
    // Number of leading strictly decreasing steps, then the rest must rise.
    std::size_t i = 0;
    while (i + 1 < values.size() && values[i + 1] < values[i]) ++i;
    const std::size_t turn = i;
    while (i + 1 < values.size() && values[i + 1] > values[i]) ++i;
    if (i + 1 != values.size()) return out;  // a tie or a second turn

    out.turning_index = turn;
    if (turn == values.size() - 1) {
        out.pattern = Pattern::StrictlyDecreasing;
    } else if (turn == 0) {
        out.pattern = Pattern::StrictlyIncreasing;
    } else {
        out.pattern = Pattern::SingleDip;
    }
    return out;
}

MonotonicityReport verify_monotonicity(double alpha, const GridSpec& grid) {
    grid.validate();
    if (!(grid.start > 0.0 && grid.end <= 1.0)) {
        throw std::invalid_argument("verify_monotonicity: grid must lie inside (0, 1]");
    }
    MonotonicityReport m;
    m.alpha = alpha;
    m.expected = expected_pattern(alpha);

    std::vector<double> f(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) f[i] = eval_f_alpha(grid.node(i), alpha);
    m.observed = classify_pattern(f);

    VerificationReport& r = m.report;
    r.check = "monotonicity alpha=" + std::to_string(alpha) + " expect " +
              std::string(to_string(m.expected));
    r.grid = grid;
    r.tolerance = 0.0;
    r.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const double step = std::fabs(f[i + 1] - f[i]);
        if (step < r.min_margin) {
            r.min_margin = step;
            r.worst_x = grid.node(i);
        }
    }
    r.passed = m.observed.pattern == m.expected;

    // Largest step against the expected direction, split at the sampled minimum.
    std::size_t turn = 0;
    if (m.expected == Pattern::StrictlyDecreasing) {
        turn = f.size() - 1;
    } else if (m.expected == Pattern::SingleDip) {
        turn = static_cast<std::size_t>(std::min_element(f.begin(), f.end()) - f.begin());
    }
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const double wrong = i < turn ? f[i + 1] - f[i] : f[i] - f[i + 1];
        r.worst_violation = std::max(r.worst_violation, wrong);
    }
    return m;
}

std::optional<Witness> exhibit_violation(double alpha, Pattern claimed) {
    if (claimed != Pattern::StrictlyIncreasing && claimed != Pattern::StrictlyDecreasing) {
        throw std::invalid_argument("exhibit_violation: claim must be a monotone pattern");
    }
    double xa = 0.5;
    double xb = 1.0;
    if (classify_regime(alpha) == Regime::Interior) {
        const MinimumLocation loc = locate_minimum(alpha);
        if (claimed == Pattern::StrictlyIncreasing) {
            xa = 0.5 * loc.x0;
            xb = loc.x0;
        } else {
            xa = loc.x0;
            xb = 1.0;
        }
    }
    const Witness w{xa, xb, eval_f_alpha(xa, alpha), eval_f_alpha(xb, alpha)};
    const bool violates =
        claimed == Pattern::StrictlyIncreasing ? w.f_a >= w.f_b : w.f_b >= w.f_a;
    if (!violates) return std::nullopt;
    return w;
}

double endpoint_quadratic_constant(double alpha) { return std::fabs(alpha - 2.0) / 6.0 + 1.0; }

double ulp_of(double v) {
    v = std::fabs(v);
    return std::nextafter(v, std::numeric_limits<double>::infinity()) - v;
}

double ulp_distance(double a, double b) {
    if (a == b) return 0.0;
    return std::fabs(a - b) / ulp_of(std::max(std::fabs(a), std::fabs(b)));
}

VerificationReport verify_endpoints(double alpha, double eps) {
    if (!(eps > 0.0 && eps <= 1e-3)) {
        throw std::domain_error("verify_endpoints: eps outside (0, 1e-3]");
    }
    VerificationReport r;
    r.check = "endpoints alpha=" + std::to_string(alpha);
    r.grid = GridSpec{eps, 1.0, 2, Spacing::Uniform};
    r.min_margin = std::numeric_limits<double>::infinity();

    const auto check = [&](double x, double got, double want, double tol) {
        const double margin = tol - std::fabs(got - want);
        if (margin < r.min_margin) {
            r.min_margin = margin;
            r.worst_x = x;
            r.tolerance = tol;
        }
    };

    const double at_zero = alpha + 1.0;
    check(eps, eval_f_alpha(eps, alpha), at_zero,
          endpoint_quadratic_constant(alpha) * eps * eps + 4.0 * ulp_of(at_zero));

    const auto at_one = static_cast<double>(kPiL * alpha / 2);
    check(1.0, eval_f_alpha(1.0, alpha), at_one, 4.0 * ulp_of(at_one));

    // The difference alpha - pi/2 cannot be more accurate than its operands.
    const auto h_one = static_cast<double>(alpha - kPiL / 2);
    check(1.0, h_alpha(1.0, alpha), h_one, 4.0 * ulp_of(std::max(std::fabs(alpha), kHalfPi)));

    r.worst_violation = std::max(0.0, -r.min_margin);
    r.passed = r.min_margin >= 0.0;
    return r;
}

}  // namespace asinb

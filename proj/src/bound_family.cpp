#include "arcsin_bounds/bound_family.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace asinb {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;

void require_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error(std::string(what) + ": x outside [0, 1]");
    }
}

void require_open_unit_interval(double x, const char* what) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error(std::string(what) + ": x outside (0, 1)");
    }
}

// Closed forms are evaluated in long double and rounded once.
double extended(long double v) { return static_cast<double>(v); }

RationalSqrtBound make_member(BoundId id) {
    const auto fc = *catalog_coefficients<long double>(id);
    return {id, side_of(id), static_cast<double>(fc.coeff), static_cast<double>(fc.shift)};
}

const std::array<RationalSqrtBound, 8>& catalog_table() {
    static const std::array<RationalSqrtBound, 8> table = {
        make_member(BoundId::ShaferFinkLower), make_member(BoundId::ShaferFinkUpper),
        make_member(BoundId::MalesevicUpper),  make_member(BoundId::ZhuLower1),
        make_member(BoundId::ZhuLower2),       make_member(BoundId::PiHalfLower),
        make_member(BoundId::PiHalfUpper),     make_member(BoundId::Sqrt3Lower),
    };
    return table;
}

}  // namespace

Regime classify_regime(double alpha) {
    if (alpha >= 2.0) return Regime::Increasing;
    if (alpha <= kHalfPi) return Regime::Decreasing;
    return Regime::Interior;
}

AlphaParam::AlphaParam(double alpha) : alpha_(alpha), regime_(classify_regime(alpha)) {
    if (std::isnan(alpha)) {
        throw std::domain_error("AlphaParam: alpha is NaN");
    }
}

std::string_view to_string(BoundId id) {
    switch (id) {
        case BoundId::ShaferFinkLower: return "shafer-fink-lower";
        case BoundId::ShaferFinkUpper: return "shafer-fink-upper";
        case BoundId::MalesevicUpper: return "malesevic-upper";
        case BoundId::ZhuLower1: return "zhu-lower-1";
        case BoundId::ZhuLower2: return "zhu-lower-2";
        case BoundId::PiHalfLower: return "pi-half-lower";
        case BoundId::PiHalfUpper: return "pi-half-upper";
        case BoundId::Sqrt3Lower: return "sqrt3-lower";
        case BoundId::ShaferSqrtLower: return "shafer-sqrt-lower";
        case BoundId::Optimal: return "optimal";
    }
    return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
    for (BoundId id : kAllBounds) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

Side side_of(BoundId id) {
    switch (id) {
        case BoundId::ShaferFinkUpper:
        case BoundId::MalesevicUpper:
        case BoundId::PiHalfUpper: return Side::Upper;
        default: return Side::Lower;
    }
}

std::string_view to_string(Side side) { return side == Side::Lower ? "lower" : "upper"; }

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Increasing: return "increasing";
        case Regime::Decreasing: return "decreasing";
        case Regime::Interior: return "interior";
    }
    return "unknown";
}

double RationalSqrtBound::operator()(double x) const { return eval_family(x, coeff, shift); }

std::span<const RationalSqrtBound> catalog() { return catalog_table(); }

const RationalSqrtBound& catalog_bound(BoundId id) {
    for (const auto& b : catalog_table()) {
        if (b.id == id) return b;
    }
    throw std::invalid_argument("catalog_bound: " + std::string(to_string(id)) +
                                " is not a sqrt-rational member");
}

double eval_family(double x, double coeff, double shift) {
    require_unit_interval(x, "eval_family");
    if (!(coeff > 0.0)) throw std::domain_error("eval_family: coeff must be > 0");
    if (!(shift > 0.0)) throw std::domain_error("eval_family: shift must be > 0");
    return extended(family_value<long double>(x, coeff, shift));
}

double eval_catalog_bound(BoundId id, double x) { return catalog_bound(id)(x); }

double eval_shafer_sqrt_lower(double x) {
    require_unit_interval(x, "eval_shafer_sqrt_lower");
    return extended(shafer_sqrt_value<long double>(x));
}

double eval_bound(BoundId id, double x) {
    require_unit_interval(x, "eval_bound");
    if (catalog_coefficients<double>(id)) return eval_catalog_bound(id, x);
    return extended(bound_value<long double>(id, x));
}

double eval_f_alpha(double x, double alpha, ArcsinFn arcsin) {
    require_unit_interval(x, "eval_f_alpha");
    if (x == 0.0) return alpha + 1.0;
    return (alpha + sqrt_one_minus_square(x)) * arcsin(x) / x;
}

EnclosureCoefficients enclosure_coefficients(const AlphaParam& alpha) {
    const long double a = alpha.value();
    if (!(a > 0)) {
        throw std::domain_error("enclosure: alpha must be > 0");
    }
    const auto at_one = static_cast<double>(kPiL * a / 2);  // f_alpha(1)
    const auto at_zero = static_cast<double>(a + 1);         // f_alpha(0+)
    switch (alpha.regime()) {
        case Regime::Increasing: return {at_zero, at_one};
        case Regime::Decreasing: return {at_one, at_zero};
        case Regime::Interior: break;
    }
    const auto min_coeff = static_cast<double>(4 * (1 - 1 / (a * a)));
    return {min_coeff, std::max(at_one, at_zero)};
}

Enclosure enclosure_for_alpha(double x, const AlphaParam& alpha) {
    require_unit_interval(x, "enclosure_for_alpha");
    const auto c = enclosure_coefficients(alpha);
    const double a = alpha.value();
    return {x, extended(family_value<long double>(x, c.lower, a)),
            extended(family_value<long double>(x, c.upper, a))};
}

Enclosure trig_enclosure(double t, const AlphaParam& alpha) {
    if (!(t >= 0.0 && t <= kHalfPi)) {
        throw std::domain_error("trig_enclosure: t outside [0, pi/2]");
    }
    const auto c = enclosure_coefficients(alpha);
    const double a = alpha.value();
    const long double tl = t;
    const long double s = std::sin(tl);
    const long double denom = a + std::cos(tl);
    return {t, extended(c.lower * s / denom), extended(c.upper * s / denom)};
}

OptimalAlphaResult best_alpha(double x) {
    require_open_unit_interval(x, "best_alpha");
    const auto angle = optimal_angle<long double>(x);
    const double a = extended(angle.alpha_star);
    const double coeff = 4.0 * (1.0 - 1.0 / (a * a));
    return {x, extended(angle.theta), a, eval_family(x, coeff, a)};
}

double best_alpha_limit(double x) {
    if (x == 0.0) return 2.0;
    if (x == 1.0) return static_cast<double>(std::sqrt(3.0L));
    throw std::domain_error("best_alpha_limit: only defined at x = 0 and x = 1");
}

double eval_optimal_lower(double x) {
    require_open_unit_interval(x, "eval_optimal_lower");
    return extended(optimal_lower_value<long double>(x));
}

}  // namespace asinb

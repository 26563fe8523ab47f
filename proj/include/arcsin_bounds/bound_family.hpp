#pragma once

// Sqrt-rational bounds c * x / (alpha + sqrt(1 - x^2)) for arcsin x on [0, 1].
//
// The closed forms are provided twice: as templates over the floating-point
// scalar (used by the oracle to re-evaluate near ties in long double) and as
// domain-checked double entry points.

#include <cmath>
#include <concepts>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>

#include "arcsin_bounds/reference.hpp"

namespace asinb {

enum class Side { Lower, Upper };

/// Monotonicity regime of f_alpha(x) = (alpha + sqrt(1 - x^2)) * arcsin(x) / x.
enum class Regime {
    Increasing,  ///< alpha >= 2
    Decreasing,  ///< alpha <= pi/2
    Interior,    ///< pi/2 < alpha < 2, unique interior minimum
};

/// pi/2 rounded to nearest double; the regime boundary used by classify_regime.
inline constexpr double kHalfPi = std::numbers::pi / 2;

/// alpha == 2 is Increasing and alpha == kHalfPi is Decreasing.
[[nodiscard]] Regime classify_regime(double alpha);

/// Shift parameter alpha paired with its regime. Any real alpha is accepted;
/// enclosure construction separately requires alpha > 0.
class AlphaParam {
public:
    explicit AlphaParam(double alpha);

    [[nodiscard]] double value() const { return alpha_; }
    [[nodiscard]] Regime regime() const { return regime_; }

private:
    double alpha_;
    Regime regime_;
};

enum class BoundId {
    ShaferFinkLower,  // 3x / (2 + u)
    ShaferFinkUpper,  // pi x / (2 + u)
    MalesevicUpper,   // (pi/(pi-2)) x / (2/(pi-2) + u)
    ZhuLower1,        // pi(4-pi) x / (2/(pi-2) + u)
    ZhuLower2,        // (pi/2) x / (1 + u)
    PiHalfLower,      // (pi^2/4) x / (pi/2 + u)
    PiHalfUpper,      // (pi/2 + 1) x / (pi/2 + u)
    Sqrt3Lower,       // (8/3) x / (sqrt3 + u)
    ShaferSqrtLower,  // 6(sqrt(1+x) - sqrt(1-x)) / (4 + sqrt(1+x) + sqrt(1-x))
    Optimal,          // pointwise-optimal lower bound at alpha*(x)
};

inline constexpr BoundId kAllBounds[] = {
    BoundId::ShaferFinkLower, BoundId::ShaferFinkUpper, BoundId::MalesevicUpper,
    BoundId::ZhuLower1,       BoundId::ZhuLower2,       BoundId::PiHalfLower,
    BoundId::PiHalfUpper,     BoundId::Sqrt3Lower,      BoundId::ShaferSqrtLower,
    BoundId::Optimal,
};

/// Kebab-case name, e.g. "shafer-fink-lower".
[[nodiscard]] std::string_view to_string(BoundId id);
[[nodiscard]] std::optional<BoundId> parse_bound_id(std::string_view name);
[[nodiscard]] Side side_of(BoundId id);
[[nodiscard]] std::string_view to_string(Side side);
[[nodiscard]] std::string_view to_string(Regime regime);

template <std::floating_point T>
struct FamilyCoefficients {
    T coeff;
    T shift;
};

/// Coefficients of the sqrt-rational catalog members, computed in T from the
/// exact expressions. Returns nullopt for the two bounds outside the family.
template <std::floating_point T>
[[nodiscard]] std::optional<FamilyCoefficients<T>> catalog_coefficients(BoundId id) {
    using std::sqrt;
    constexpr T pi = std::numbers::pi_v<T>;
    switch (id) {
        case BoundId::ShaferFinkLower: return FamilyCoefficients<T>{T(3), T(2)};
        case BoundId::ShaferFinkUpper: return FamilyCoefficients<T>{pi, T(2)};
        case BoundId::MalesevicUpper: return FamilyCoefficients<T>{pi / (pi - 2), 2 / (pi - 2)};
        case BoundId::ZhuLower1: return FamilyCoefficients<T>{pi * (4 - pi), 2 / (pi - 2)};
        case BoundId::ZhuLower2: return FamilyCoefficients<T>{pi / 2, T(1)};
        case BoundId::PiHalfLower: return FamilyCoefficients<T>{pi * pi / 4, pi / 2};
        case BoundId::PiHalfUpper: return FamilyCoefficients<T>{pi / 2 + 1, pi / 2};
        case BoundId::Sqrt3Lower: return FamilyCoefficients<T>{T(8) / 3, sqrt(T(3))};
        case BoundId::ShaferSqrtLower:
        case BoundId::Optimal: break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Unchecked closed-form kernels.

/// sqrt(1 - x^2) as sqrt((1 - x)(1 + x)).
template <std::floating_point T>
[[nodiscard]] T sqrt_one_minus_square(T x) {
    using std::sqrt;
    return sqrt((T(1) - x) * (T(1) + x));
}

template <std::floating_point T>
[[nodiscard]] T family_value(T x, T coeff, T shift) {
    return coeff * x / (shift + sqrt_one_minus_square(x));
}

/// Middle member of Shafer's chain. sqrt(1+x) - sqrt(1-x) is rewritten as
/// 2x / (sqrt(1+x) + sqrt(1-x)) to avoid cancellation for small x.
template <std::floating_point T>
[[nodiscard]] T shafer_sqrt_value(T x) {
    using std::sqrt;
    const T p = sqrt(T(1) + x);
    const T m = sqrt(T(1) - x);
    return T(12) * x / ((p + m) * (T(4) + p + m));
}

/// theta = atan(x / sqrt(1 - x^2)) / 3 and alpha* = 2 cos(theta).
template <std::floating_point T>
struct OptimalAngle {
    T theta;
    T alpha_star;
};

template <std::floating_point T>
[[nodiscard]] OptimalAngle<T> optimal_angle(T x) {
    using std::atan2;
    using std::cos;
    const T theta = atan2(x, sqrt_one_minus_square(x)) / T(3);
    return {theta, T(2) * cos(theta)};
}

/// x (4cos^2 - 1) / ((2cos + u) cos^2) with cos = cos(theta(x)).
template <std::floating_point T>
[[nodiscard]] T optimal_lower_value(T x) {
    using std::cos;
    const T u = sqrt_one_minus_square(x);
    const T c = cos(optimal_angle(x).theta);
    const T c2 = c * c;
    return x * (T(4) * c2 - T(1)) / ((T(2) * c + u) * c2);
}

/// Value of any catalog bound at x in [0, 1], evaluated in T. The optimal
/// bound uses its limits at the endpoints (0 at x = 0, 8/(3 sqrt3) at x = 1).
template <std::floating_point T>
[[nodiscard]] T bound_value(BoundId id, T x) {
    using std::sqrt;
    if (auto fc = catalog_coefficients<T>(id)) {
        return family_value(x, fc->coeff, fc->shift);
    }
    if (id == BoundId::ShaferSqrtLower) {
        return shafer_sqrt_value(x);
    }
    if (x == T(0)) return T(0);
    if (x == T(1)) return T(8) / (T(3) * sqrt(T(3)));
    return optimal_lower_value(x);
}

// ---------------------------------------------------------------------------
// Domain-checked double API. Violations throw std::domain_error.

/// A catalog member of the sqrt-rational family, valid on [0, 1].
struct RationalSqrtBound {
    BoundId id;
    Side side;
    double coeff;
    double shift;

    [[nodiscard]] double operator()(double x) const;
};

/// The eight sqrt-rational catalog members, coefficients rounded from long double.
[[nodiscard]] std::span<const RationalSqrtBound> catalog();

/// Throws std::invalid_argument when id is not a sqrt-rational member.
[[nodiscard]] const RationalSqrtBound& catalog_bound(BoundId id);

/// coeff * x / (shift + sqrt(1 - x^2)); exactly 0 at x = 0.
[[nodiscard]] double eval_family(double x, double coeff, double shift);

/// Sqrt-rational members only; see eval_bound for the full catalog.
[[nodiscard]] double eval_catalog_bound(BoundId id, double x);

[[nodiscard]] double eval_shafer_sqrt_lower(double x);

/// Any catalog bound on [0, 1], including the optimal bound's endpoint limits.
[[nodiscard]] double eval_bound(BoundId id, double x);

/// f_alpha(x) = (alpha + sqrt(1 - x^2)) arcsin(x) / x for x in [0, 1].
/// At x = 0 the removable-singularity value alpha + 1 is returned.
[[nodiscard]] double eval_f_alpha(double x, double alpha, ArcsinFn arcsin = arcsin_ref);

/// lower <= arcsin(x) <= upper.
struct Enclosure {
    double x = 0.0;
    double lower = 0.0;
    double upper = 0.0;

    [[nodiscard]] bool contains(double value, double tol = 1e-12) const {
        return lower <= value + tol && value <= upper + tol;
    }
};

/// Numerator coefficients of the enclosure for shift alpha:
///   Increasing: (alpha + 1, pi alpha / 2)
///   Decreasing: (pi alpha / 2, alpha + 1)
///   Interior:   (4 (1 - 1/alpha^2), max(pi alpha / 2, alpha + 1))
struct EnclosureCoefficients {
    double lower;
    double upper;
};

/// Throws std::domain_error for alpha <= 0.
[[nodiscard]] EnclosureCoefficients enclosure_coefficients(const AlphaParam& alpha);

[[nodiscard]] Enclosure enclosure_for_alpha(double x, const AlphaParam& alpha);

/// Enclosure of t in [0, pi/2]: the same members with x = sin t and
/// sqrt(1 - x^2) replaced by cos t. Enclosure::x holds t.
[[nodiscard]] Enclosure trig_enclosure(double t, const AlphaParam& alpha);

struct OptimalAlphaResult {
    double x;
    double theta;
    double alpha_star;
    double bound_value;
};

/// Maximizer alpha* = 2 cos(atan(x / sqrt(1 - x^2)) / 3) of the lower
/// coefficient map, for x in the open interval (0, 1).
[[nodiscard]] OptimalAlphaResult best_alpha(double x);

/// Endpoint limits of alpha*: 2 at x = 0 and sqrt(3) at x = 1.
[[nodiscard]] double best_alpha_limit(double x);

/// The pointwise-optimal lower bound, x in (0, 1).
[[nodiscard]] double eval_optimal_lower(double x);

}  // namespace asinb

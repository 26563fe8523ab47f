#pragma once

// Numerical certification harness: every claim is checked on a grid against
// the reference arc sine with an explicit absolute tolerance.

#include <cstddef>
#include <optional>
#include <string>

#include "arcsin_bounds/bound_family.hpp"
#include "arcsin_bounds/grid.hpp"

namespace asinb {

inline constexpr double kDefaultTol = 1e-12;

/// Margins below this are re-evaluated with arcsin_refined and long double bounds.
inline constexpr double kRefineBelow = 1e-13;

enum class Refinement {
    Auto,    ///< refine only margins below kRefineBelow
    Always,
    Never,
};

struct VerificationReport {
    std::string check;
    GridSpec grid;
    bool passed = true;
    double worst_violation = 0.0;  ///< max(0, -min_margin)
    double worst_x = 0.0;          ///< node of the smallest margin
    double min_margin = 0.0;
    double tolerance = kDefaultTol;
    std::size_t refined_nodes = 0;
};

/// lower <= arcsin x <= upper at every node for the alpha enclosure.
[[nodiscard]] VerificationReport verify_enclosure(const AlphaParam& alpha, const GridSpec& grid,
                                                  double tol = kDefaultTol,
                                                  Refinement refine = Refinement::Auto);

/// Side check of one catalog bound against arcsin x.
[[nodiscard]] VerificationReport verify_bound(BoundId id, const GridSpec& grid,
                                              double tol = kDefaultTol,
                                              Refinement refine = Refinement::Auto);

/// Strict chain 3x/(2+u) < Shafer middle member < arcsin x at every node.
/// Intended for grids inside (0, 1) where the gaps are resolvable.
[[nodiscard]] VerificationReport verify_shafer_chain(const GridSpec& grid);

enum class Pattern { StrictlyIncreasing, StrictlyDecreasing, SingleDip, Other };

[[nodiscard]] std::string_view to_string(Pattern pattern);

/// Pattern an alpha must produce: Increasing -> StrictlyIncreasing, etc.
[[nodiscard]] Pattern expected_pattern(double alpha);

/// Strict ordering pattern of a sampled sequence; equal neighbours give Other.
struct ObservedPattern {
    Pattern pattern = Pattern::Other;
    std::size_t turning_index = 0;  ///< index of the minimum for SingleDip
};

[[nodiscard]] ObservedPattern classify_pattern(const std::vector<double>& values);

struct MonotonicityReport {
    VerificationReport report;
    double alpha = 0.0;
    Pattern expected = Pattern::Other;
    ObservedPattern observed;
};

/// Samples f_alpha on a grid inside (0, 1] and compares the ordering pattern
/// with the regime's.
[[nodiscard]] MonotonicityReport verify_monotonicity(double alpha, const GridSpec& grid);

/// Two points x_a < x_b whose f_alpha values contradict a claimed pattern.
struct Witness {
    double x_a;
    double x_b;
    double f_a;
    double f_b;
};

/// Searches for a counterexample to `claimed` (StrictlyIncreasing or
/// StrictlyDecreasing). For interior alpha the witness pairs the located
/// minimum with x0/2 or with 1. Returns nullopt when no candidate violates.
[[nodiscard]] std::optional<Witness> exhibit_violation(double alpha, Pattern claimed);

/// Endpoint checks, eps in (0, 1e-3]:
///   |f_alpha(eps) - (alpha + 1)| <= endpoint_quadratic_constant(alpha) eps^2 + 4 ulp
///   |f_alpha(1) - pi alpha / 2| <= 4 ulp
///   |h_alpha(1) - (alpha - pi/2)| <= 4 ulp
[[nodiscard]] VerificationReport verify_endpoints(double alpha, double eps);

/// |alpha - 2| / 6 + 1: covers f_alpha(x) = alpha + 1 + (alpha - 2) x^2 / 6 + x^4 / 60 + ...
[[nodiscard]] double endpoint_quadratic_constant(double alpha);

/// Spacing between |v| and the next larger double.
[[nodiscard]] double ulp_of(double v);

/// |a - b| in units of ulp_of(max(|a|, |b|)).
[[nodiscard]] double ulp_distance(double a, double b);

}  // namespace asinb

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "arcsin_bounds/verify.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace asinb;
using asinb::test::kAsinHalf;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("arcsin_ref") {
    CHECK(arcsin_ref(0.0) == 0.0);
    CHECK(arcsin_ref(1.0) == kPi / 2);
    CHECK(arcsin_ref(-1.0) == -kPi / 2);
    CHECK(ulp_distance(arcsin_ref(0.5), kAsinHalf) <= 4);
    CHECK_THROWS_AS((void)arcsin_ref(1.0000001), std::domain_error);
    CHECK_THROWS_AS((void)arcsin_ref(std::nan("")), std::domain_error);
}

TEST_CASE("arcsin_refined carries digits beyond double") {
    constexpr long double kAsinHalfL = 0.523598775598298873077107230546583814L;
    CHECK(std::fabs(arcsin_refined(0.5).value() - kAsinHalfL) < 1e-19L);
    CHECK(arcsin_refined(1.0).value() == std::numbers::pi_v<long double> / 2);
    CHECK(arcsin_refined(-0.5).value() == -arcsin_refined(0.5).value());
    CHECK(arcsin_refined(0.0).value() == 0.0L);

    // Near 1 the half-angle residual keeps the refinement accurate:
    // asin(1 - d) = pi/2 - sqrt(2d) (1 + d/12 + ...).
    const double d = 0x1p-40;
    const long double want =
        std::numbers::pi_v<long double> / 2 - std::sqrt(2.0L * d) * (1 + d / 12.0L);
    CHECK(std::fabs(arcsin_refined(1.0 - d).value() - want) < 1e-18L);
    CHECK_THROWS_AS((void)arcsin_refined(2.0), std::domain_error);
}

TEST_CASE("property: arcsin_ref round trip within 8 ulp") {
    auto gen = asinb::test::rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100000; ++i) {
        const double x = unit(gen);
        REQUIRE(ulp_distance(std::sin(arcsin_ref(x)), x) <= 8);
    }
}

TEST_CASE("property: arcsin_ref within 4 ulp of the refined value") {
    auto gen = asinb::test::rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const double x = unit(gen);
        const long double refined = arcsin_refined(x).value();
        const double base = arcsin_ref(x);
        REQUIRE(std::fabs(base - refined) <= 4.0L * ulp_of(base));
    }
}

TEST_CASE("grid nodes") {
    const GridSpec u = uniform_grid(0.0, 1.0, 11);
    const auto xs = u.nodes();
    REQUIRE(xs.size() == 11);
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() == 1.0);
    CHECK(xs[5] == 0.5);

    const GridSpec c = chebyshev_grid(0.0, 1.0, 1000);
    const auto cs = c.nodes();
    CHECK(cs.front() == 0.0);
    CHECK(cs.back() == 1.0);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) CHECK(cs[i] <= cs[i + 1]);
    // Clustered at the ends: the last gap is far below the uniform spacing.
    CHECK(cs[999] - cs[998] < 1e-5);

    CHECK_THROWS_AS((void)uniform_grid(1.0, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)uniform_grid(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("verify_enclosure across regimes") {
    const GridSpec grid = uniform_grid(0.0, 1.0, 20001);
    for (double alpha : {2.0, 3.0, kHalfPi, 1.2, 1.8, 1.9}) {
        CAPTURE(alpha);
        const auto r = verify_enclosure(AlphaParam(alpha), grid);
        CHECK(r.passed);
        CHECK(r.worst_violation <= r.tolerance);
    }
    CHECK_THROWS_AS((void)verify_enclosure(AlphaParam(0.0), grid), std::domain_error);
}

TEST_CASE("verify_bound reports the worst node") {
    const GridSpec grid = uniform_grid(0.0, 1.0, 101);
    const auto ok = verify_bound(BoundId::ShaferFinkLower, grid);
    CHECK(ok.passed);
    CHECK(ok.min_margin >= 0.0);

    // tol < 0 demands a strictly positive margin, which x = 0 cannot give.
    const auto strict = verify_bound(BoundId::ShaferFinkLower, grid, -1e-3);
    CHECK_FALSE(strict.passed);
    CHECK(strict.worst_x == 0.0);
}

TEST_CASE("refinement does not change verdicts with comfortable margins") {
    const GridSpec grid = chebyshev_grid(0.0, 1.0, 1000);
    for (BoundId id : kAllBounds) {
        CAPTURE(to_string(id));
        const auto never = verify_bound(id, grid, kDefaultTol, Refinement::Never);
        const auto always = verify_bound(id, grid, kDefaultTol, Refinement::Always);
        CHECK(never.passed == always.passed);
        CHECK(always.refined_nodes == grid.count);
        CHECK(never.refined_nodes == 0);
    }
}

TEST_CASE("Shafer chain is strict where the gaps are resolvable") {
    const auto r = verify_shafer_chain(uniform_grid(0.01, 1.0 - 1e-12, 100000));
    CHECK(r.passed);
    CHECK(r.min_margin > 0.0);
}

TEST_CASE("classify_pattern") {
    CHECK(classify_pattern({1, 2, 3}).pattern == Pattern::StrictlyIncreasing);
    CHECK(classify_pattern({3, 2, 1}).pattern == Pattern::StrictlyDecreasing);
    const auto dip = classify_pattern({3, 1, 2});
    CHECK(dip.pattern == Pattern::SingleDip);
    CHECK(dip.turning_index == 1);
    CHECK(classify_pattern({1, 1, 2}).pattern == Pattern::Other);
    CHECK(classify_pattern({3, 1, 2, 1}).pattern == Pattern::Other);
    CHECK(classify_pattern({1, 2, 1}).pattern == Pattern::Other);
}

TEST_CASE("verify_monotonicity") {
    const GridSpec grid = uniform_grid(1e-3, 1.0, 1000);
    const auto inc = verify_monotonicity(2.0, grid);
    CHECK(inc.report.passed);
    CHECK(inc.observed.pattern == Pattern::StrictlyIncreasing);

    const auto dec = verify_monotonicity(1.5707, grid);
    CHECK(dec.report.passed);
    CHECK(dec.observed.pattern == Pattern::StrictlyDecreasing);

    const auto dip = verify_monotonicity(1.9, grid);
    CHECK(dip.report.passed);
    CHECK(dip.observed.pattern == Pattern::SingleDip);
    CHECK(grid.node(dip.observed.turning_index) == Approx(0.6572750235557537518).epsilon(2e-3));

    CHECK_THROWS_AS((void)verify_monotonicity(2.0, uniform_grid(0.0, 1.0, 10)),
                    std::invalid_argument);
}

TEST_CASE("exhibit_violation for alphas just outside the closed regimes") {
    const auto not_inc = exhibit_violation(2.0 - 1e-3, Pattern::StrictlyIncreasing);
    REQUIRE(not_inc.has_value());
    CHECK(not_inc->x_a < not_inc->x_b);
    CHECK(not_inc->f_a > not_inc->f_b);

    const auto not_dec = exhibit_violation(kHalfPi + 1e-3, Pattern::StrictlyDecreasing);
    REQUIRE(not_dec.has_value());
    CHECK(not_dec->f_b - not_dec->f_a == Approx(1.0687149838834209963e-6).epsilon(1e-3));

    CHECK_FALSE(exhibit_violation(2.0, Pattern::StrictlyIncreasing).has_value());
    CHECK_FALSE(exhibit_violation(kHalfPi, Pattern::StrictlyDecreasing).has_value());
    CHECK(exhibit_violation(1.0, Pattern::StrictlyIncreasing).has_value());
    CHECK_THROWS_AS((void)exhibit_violation(1.9, Pattern::SingleDip), std::invalid_argument);
}

TEST_CASE("verify_endpoints") {
    const auto two = verify_endpoints(2.0, 1e-6);
    CHECK(two.passed);
    CHECK(std::fabs(eval_f_alpha(1e-6, 2.0) - 3.0) <= 1e-9);

    CHECK(verify_endpoints(kHalfPi, 1e-6).passed);
    CHECK(std::fabs(eval_f_alpha(1.0, kHalfPi) - kPi * kPi / 4) <= 4 * ulp_of(kPi * kPi / 4));
    for (double alpha : {-1.0, 0.5, 1.76, 1.9, 10.0}) {
        CAPTURE(alpha);
        CHECK(verify_endpoints(alpha, 1e-3).passed);
    }
    CHECK_THROWS_AS((void)verify_endpoints(2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)verify_endpoints(2.0, 0.1), std::domain_error);
}

TEST_CASE("ulp helpers") {
    CHECK(ulp_of(1.0) == 0x1p-52);
    CHECK(ulp_distance(1.0, std::nextafter(1.0, 2.0)) == 1.0);
    CHECK(ulp_distance(2.0, 2.0) == 0.0);
}

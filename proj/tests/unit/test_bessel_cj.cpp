#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "weylheat/carslaw_jaeger.hpp"
#include "weylheat/kernels.hpp"
#include "weylheat/rng.hpp"

using namespace weylheat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("modified Bessel I against frozen high-precision values") {
    // reference values from a 60-digit power-series evaluation
    CHECK_THAT(bessel_I(3, 2.5), WithinRel(0.474370408778035589554824, 1e-13));
    CHECK_THAT(bessel_I(0, 0.1), WithinRel(1.002501562934095601678113, 1e-13));
    CHECK_THAT(bessel_I(1, 1.0), WithinRel(0.565159103992485027207696, 1e-13));
    CHECK_THAT(bessel_I(10, 5.0), WithinRel(0.00458004441917605126118647, 1e-13));
    CHECK_THAT(bessel_I(40, 30.0), WithinRel(24.05569763953388129884433, 1e-13));
    CHECK_THAT(bessel_I(0.5, 2.0), WithinRel(2.046236863089055036605184, 1e-13));
    CHECK_THAT(bessel_I(12, 7.2), WithinRel(0.02594534205954101245816674, 1e-13));
    CHECK_THAT(bessel_I(200, 50.0), WithinRel(1.074840306169981715231046e-94, 1e-12));
}

TEST_CASE("Bessel edge cases and argument checks") {
    CHECK(bessel_I(0, 0.0) == 1.0);
    CHECK(bessel_I(3, 0.0) == 0.0);
    CHECK(bessel_I(0.7, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_I(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_I(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("Bessel three-term recurrence") {
    for (double nu : {1.0, 2.0, 5.0, 10.0, 25.0, 50.0}) {
        for (double z : {0.1, 0.5, 2.0, 7.0, 15.0, 30.0}) {
            double lhs = bessel_I(nu - 1, z) - bessel_I(nu + 1, z);
            double rhs = 2.0 * nu / z * bessel_I(nu, z);
            CHECK_THAT(lhs, WithinRel(rhs, 1e-11));
        }
    }
}

TEST_CASE("Carslaw-Jaeger Dirichlet series vanishes on the wall") {
    // even n: the wall theta = 0 zeroes every sine factor
    SeriesResult r = carslaw_jaeger(WedgeKind::dirichlet, 4, 0.2, Vec{0.9, 0.0}, Vec{0.5, 0.2});
    CHECK(r.value == 0.0);
}

TEST_CASE("Carslaw-Jaeger agrees with the image sums") {
    {
        // even n, Dirichlet
        Vec x{0.5, 0.2}, y{0.5, 0.2};
        double t = 0.1;
        SeriesResult r = carslaw_jaeger(WedgeKind::dirichlet, 4, t, x, y);
        CHECK(r.converged);
        double ref = dihedral_heat(DihedralKind::dirichlet, 4, t, x, y);
        double scale = heat_base(t, 2, Vec{0.0, 0.0});
        CHECK(std::abs(r.value - ref) <= 1e-8 * scale);
    }
    {
        // odd n, Dirichlet, coincident points on the chamber bisector
        ReflectionGroup w = generate_group(dihedral_roots(3));
        Vec x{0.8, 0.0};  // the odd-n chamber bisector is the positive x-axis
        double t = 0.15;
        SeriesResult r = carslaw_jaeger(WedgeKind::dirichlet, 3, t, x, x);
        double ref = heat_kernel(w, sgn_character(w), t)(x, x);
        double scale = heat_kernel(w, trivial_character(w), t).trivial_scale(x, x);
        CHECK(std::abs(r.value - ref) <= 1e-8 * scale);
    }
    {
        // odd n, Neumann, random chamber pairs (angles shifted internally)
        Rng rng(41);
        ReflectionGroup w = generate_group(dihedral_roots(3));
        for (int trial = 0; trial < 20; ++trial) {
            double t = rng.uniform(0.05, 0.3);
            double rho = rng.uniform(0.2, 1.2), th = rng.uniform(-0.4, 0.4) * std::numbers::pi / 6;
            double rr = rng.uniform(0.2, 1.2), xi = rng.uniform(-0.4, 0.4) * std::numbers::pi / 6;
            Vec x{rho * std::cos(th), rho * std::sin(th)};
            Vec y{rr * std::cos(xi), rr * std::sin(xi)};
            SeriesResult r = carslaw_jaeger(WedgeKind::neumann, 3, t, x, y);
            CHECK(r.converged);
            double ref = dihedral_heat(DihedralKind::neumann, 3, t, x, y);
            double scale = heat_kernel(w, trivial_character(w), t).trivial_scale(x, y);
            CHECK(std::abs(r.value - ref) <= 1e-8 * scale);
        }
    }
}

TEST_CASE("series truncation bound dominates the tail") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + (trial % 4);
        double aperture = std::numbers::pi / n;
        double lo = (n % 2 == 0) ? 0.0 : -aperture / 2;
        double t = rng.uniform(0.05, 0.4);
        double rho = rng.uniform(0.3, 1.5), th = lo + rng.uniform(0.1, 0.9) * aperture;
        double rr = rng.uniform(0.3, 1.5), xi = lo + rng.uniform(0.1, 0.9) * aperture;
        Vec x{rho * std::cos(th), rho * std::sin(th)};
        Vec y{rr * std::cos(xi), rr * std::sin(xi)};
        WedgeKind kind = (trial % 2 == 0) ? WedgeKind::dirichlet : WedgeKind::neumann;

        SeriesSpec coarse(4, 1e-300);  // force truncation by term count
        SeriesSpec fine(8, 1e-300);
        SeriesResult a = carslaw_jaeger(kind, n, t, x, y, coarse);
        SeriesResult b = carslaw_jaeger(kind, n, t, x, y, fine);
        double rounding = 1e-14 * (std::abs(a.value) + std::abs(b.value));
        CHECK(std::abs(a.value - b.value) <= a.tail_bound * (1.0 + 1e-12) + rounding + 1e-300);
    }
}

TEST_CASE("series reports non-convergence when starved") {
    SeriesSpec starved(1, 1e-300);
    SeriesResult r = carslaw_jaeger(WedgeKind::dirichlet, 3, 0.05, Vec{1.2, 0.1}, Vec{1.1, -0.1}, starved);
    CHECK_FALSE(r.converged);
}

TEST_CASE("series rejects points outside the chamber") {
    CHECK_THROWS_AS(carslaw_jaeger(WedgeKind::dirichlet, 4, 0.1, Vec{0.5, -0.2}, Vec{0.5, 0.2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(carslaw_jaeger(WedgeKind::dirichlet, 4, -0.1, Vec{0.5, 0.2}, Vec{0.5, 0.2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SeriesSpec(0, 1e-10), std::invalid_argument);
}

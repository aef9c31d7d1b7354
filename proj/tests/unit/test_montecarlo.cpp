#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "weylheat/ibvp.hpp"
#include "weylheat/montecarlo.hpp"

using namespace weylheat;

TEST_CASE("free endpoints pin the diffusion normalization") {
    // With no mirrors, the bin at the start point must see density p_t(0):
    // this nails the variance-2t convention of the generator.
    ReflectionGroup w = ReflectionGroup::trivial(1);
    double t = 0.5;
    BinSpec bins = BinSpec::uniform_tensor(Vec{-4.0}, Vec{4.0}, 40);
    McEstimate est = mc_folded_density(w, Vec{0.0}, t, 400000, bins, 2024);
    int center = bins.locate(Vec{0.05});
    REQUIRE(center >= 0);
    double expect = bins.average(center, [&](const Vec& y) { return heat_base(t, 1, Vec{y[0]}); });
    CHECK(std::abs(est.density(center) - expect) <= 3.0 * est.density_stderr(center));
}

TEST_CASE("folded density matches the Neumann kernel on the orthant") {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    TwoCharacter triv = trivial_character(w);
    double t = 0.5;
    Vec x{1.0, 1.0};
    BinSpec bins = BinSpec::uniform_tensor(Vec{0.0, 0.0}, Vec{4.0, 4.0}, 16);
    McEstimate est = mc_folded_density(w, x, t, 200000, bins, 31416);
    SymmetrizedKernel k = heat_kernel(w, triv, t);

    int occupied = 0, agree = 0;
    for (int b = 0; b < bins.count(); ++b) {
        if (est.counts[static_cast<std::size_t>(b)] == 0) continue;
        ++occupied;
        double expect = bins.average(b, [&](const Vec& y) { return k(x, y); });
        if (std::abs(est.density(b) - expect) <= 4.0 * est.density_stderr(b)) ++agree;
    }
    REQUIRE(occupied > 50);
    CHECK(static_cast<double>(agree) / occupied >= 0.90);
    CHECK(est.binned_mass() <= 1.0);
    CHECK(est.binned_mass() > 0.9);  // most endpoints land inside [0,4]^2
}

TEST_CASE("folded density matches the Neumann kernel on a wedge") {
    const double pi = std::numbers::pi;
    ReflectionGroup w = generate_group(dihedral_roots(3));
    double t = 0.3;
    Vec x{1.0, 0.0};
    BinSpec bins = BinSpec::uniform_polar(3.0, 12, -pi / 6, pi / 6, 10);
    McEstimate est = mc_folded_density(w, x, t, 200000, bins, 7);
    SymmetrizedKernel k = heat_kernel(w, trivial_character(w), t);
    int occupied = 0, agree = 0;
    for (int b = 0; b < bins.count(); ++b) {
        if (est.counts[static_cast<std::size_t>(b)] == 0) continue;
        ++occupied;
        double expect = bins.average(b, [&](const Vec& y) { return k(x, y); });
        if (std::abs(est.density(b) - expect) <= 4.0 * est.density_stderr(b)) ++agree;
    }
    REQUIRE(occupied > 40);
    CHECK(static_cast<double>(agree) / occupied >= 0.90);
}

TEST_CASE("multithreaded sampling is deterministic given (seed, threads)") {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    BinSpec bins = BinSpec::uniform_tensor(Vec{0.0, 0.0}, Vec{3.0, 3.0}, 8);
    McEstimate a = mc_folded_density(w, Vec{0.8, 0.8}, 0.4, 50000, bins, 5, 3);
    McEstimate b = mc_folded_density(w, Vec{0.8, 0.8}, 0.4, 50000, bins, 5, 3);
    CHECK(a.counts == b.counts);
}

TEST_CASE("killed mass basics") {
    ReflectionGroup h = generate_group(orthogonal_roots(1, {1}));
    // start deep inside: killing is improbable
    KilledMassEstimate deep = mc_killed_mass(h, Vec{20.0}, 1.0, 4000, 200, 11);
    CHECK(deep.survival > 0.999);

    // half-line, x = 1, t = 1: compare against the quadrature mass of the
    // Dirichlet kernel, allowing the documented discretization bias
    auto cs = enumerate_characters(h);
    const TwoCharacter* sgn = nullptr;
    for (const auto& c : cs)
        if (c.name == "sgn") sgn = &c;
    REQUIRE(sgn);
    double quad = mass(h, *sgn, 1.0, Vec{1.0});
    KilledMassEstimate est = mc_killed_mass(h, Vec{1.0}, 1.0, 20000, 2000, 12345);
    CHECK(est.survival >= 0.0);
    CHECK(est.survival <= 1.0);
    CHECK(std::abs(est.survival - quad) <= 3.0 * est.std_error + 0.01);

    CHECK_THROWS_AS(mc_killed_mass(h, Vec{1.0}, -1.0, 100, 200, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_killed_mass(h, Vec{1.0}, 1.0, 100, 50, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_killed_mass(h, Vec{-1.0}, 1.0, 100, 200, 1), std::invalid_argument);
}

TEST_CASE("orthant survival factorizes") {
    ReflectionGroup o2 = generate_group(orthogonal_roots(2, {1, 2}));
    ReflectionGroup h = generate_group(orthogonal_roots(1, {1}));
    auto hcs = enumerate_characters(h);
    const TwoCharacter* sgn = nullptr;
    for (const auto& c : hcs)
        if (c.name == "sgn") sgn = &c;
    REQUIRE(sgn);
    double s1 = mass(h, *sgn, 0.5, Vec{0.9});
    double s2 = mass(h, *sgn, 0.5, Vec{1.4});
    KilledMassEstimate est = mc_killed_mass(o2, Vec{0.9, 1.4}, 0.5, 20000, 2000, 777);
    CHECK(std::abs(est.survival - s1 * s2) <= 3.0 * est.std_error + 0.01);
}

TEST_CASE("mc argument validation") {
    ReflectionGroup w = generate_group(orthogonal_roots(1, {1}));
    BinSpec bins = BinSpec::uniform_tensor(Vec{0.0}, Vec{2.0}, 4);
    CHECK_THROWS_AS(mc_folded_density(w, Vec{1.0}, 0.0, 100, bins, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_folded_density(w, Vec{1.0}, 1.0, 0, bins, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_folded_density(w, Vec{-1.0}, 1.0, 100, bins, 1), std::invalid_argument);
}

TEST_CASE("folded histogram is a proper density") {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    Vec x{0.8, 0.8};
    double t = 0.4;
    BinSpec narrow = BinSpec::uniform_tensor(Vec{0.0, 0.0}, Vec{2.0, 2.0}, 10);
    BinSpec wide = BinSpec::uniform_tensor(Vec{0.0, 0.0}, Vec{5.0, 5.0}, 10);
    McEstimate a = mc_folded_density(w, x, t, 100000, narrow, 77);
    McEstimate b = mc_folded_density(w, x, t, 100000, wide, 77);
    CHECK(a.binned_mass() <= 1.0);
    CHECK(b.binned_mass() <= 1.0);
    // growing the binned region captures more of the unit mass
    CHECK(b.binned_mass() > a.binned_mass());
    CHECK(b.binned_mass() > 0.995);
}

TEST_CASE("killed mass is monotone non-increasing in t") {
    ReflectionGroup h = generate_group(orthogonal_roots(1, {1}));
    double prev = 1.0;
    for (double t : {0.25, 0.5, 1.0}) {
        KilledMassEstimate est = mc_killed_mass(h, Vec{1.0}, t, 20000, 400, 99);
        CHECK(est.survival >= 0.0);
        CHECK(est.survival <= 1.0);
        CHECK(est.survival <= prev + 3.0 * est.std_error);
        prev = est.survival;
    }
}

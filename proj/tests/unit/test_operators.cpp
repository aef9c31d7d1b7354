#include "catch2/catch_amalgamated.hpp"

#include <cmath>

#include "weylheat/operator_identities.hpp"

using namespace weylheat;
using Catch::Matchers::WithinAbs;

namespace {

double gaussian(const Vec& x) { return std::exp(-0.5 * norm_sq(x)); }

/// seeded low-degree polynomial times an off-center Gaussian; the generic
/// offset puts a component into every isotypic piece of every weight
auto poly_gauss(int d, std::uint64_t seed) {
    Rng rng(seed);
    Vec lin(static_cast<std::size_t>(d)), center(static_cast<std::size_t>(d));
    for (auto& c : lin) c = rng.uniform(-1.0, 1.0);
    for (auto& c : center) c = rng.uniform(0.8, 1.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    double c0 = rng.uniform(-1.0, 1.0);
    double cq = rng.uniform(-0.5, 0.5);
    return [lin, center, c0, cq](const Vec& x) {
        double p = c0 + dot(lin, x) + cq * x[0] * x[0];
        return p * std::exp(-0.5 * norm_sq(x - center));
    };
}

}  // namespace

TEST_CASE("extension pairing: plain average of a Gaussian") {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    auto phi = [](const Vec&) { return 1.0; };
    PairingResult r = check_extension_pairing(w, trivial_weight(w), phi, gaussian, 8.0, 64, 64);
    CHECK(r.residual < 1e-8);
}

TEST_CASE("extension pairing: sgn against an even function cancels both sides") {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    Weight sgn = weight_from_character(sgn_character(w));
    auto phi = [](const Vec& x) { return std::exp(-0.3 * norm_sq(x)); };
    PairingResult r = check_extension_pairing(w, sgn, phi, gaussian);
    CHECK(std::abs(r.lhs) < 1e-12);
    CHECK(std::abs(r.rhs) < 1e-12);
}

TEST_CASE("extension pairing holds for every character weight") {
    for (auto make : {+[] { return generate_group(orthogonal_roots(2, {1, 2})); },
                      +[] { return generate_group(dihedral_roots(3)); },
                      +[] { return generate_group(dihedral_roots(4)); }}) {
        ReflectionGroup w = make();
        auto cs = enumerate_characters(w);
        auto phi = poly_gauss(w.dimension(), 100);
        auto big = poly_gauss(w.dimension(), 200);
        for (const TwoCharacter& chi : cs) {
            PairingResult r = check_extension_pairing(w, weight_from_character(chi), phi, big, 9.0);
            INFO(chi.name << " lhs=" << r.lhs << " rhs=" << r.rhs);
            CHECK(r.residual < 1e-7);
        }
    }
}

TEST_CASE("derivative intertwining: degenerate cases") {
    ReflectionGroup w = generate_group(dihedral_roots(4));
    AnalyticField constant{"const", [](const Vec&) { return 2.0; },
                           [](const Vec& x) { return Vec(x.size(), 0.0); }};
    IntertwiningResidual r = check_derivative_intertwining(w, trivial_weight(w), constant, Vec{0.4, 0.2});
    CHECK(r.h2 == 0.0);
    CHECK(r.h3 == 0.0);

    // radially symmetric F with the plain average: A F = F
    AnalyticField radial{"gauss", [](const Vec& x) { return std::exp(-norm_sq(x)); },
                         [](const Vec& x) { return -2.0 * std::exp(-norm_sq(x)) * x; }};
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        IntertwiningResidual q =
            check_derivative_intertwining(w, trivial_weight(w), radial, rng.normal_vec(2));
        CHECK(q.h2 < 1e-12);
        CHECK(q.h3 < 1e-12);
    }
}

TEST_CASE("derivative intertwining across systems and weights") {
    for (auto make : {+[] { return generate_group(orthogonal_roots(2, {1, 2})); },
                      +[] { return generate_group(orthogonal_roots(3, {1, 2, 3})); },
                      +[] { return generate_group(dihedral_roots(4)); },
                      +[] { return generate_group(dihedral_roots(5)); }}) {
        ReflectionGroup w = make();
        Rng rng(9);
        for (const AnalyticField& f : analytic_corpus(w.dimension())) {
            for (const TwoCharacter& chi : enumerate_characters(w)) {
                Weight om = weight_from_character(chi);
                for (int i = 0; i < 50; ++i) {
                    Vec y = rng.normal_vec(w.dimension());
                    IntertwiningResidual r = check_derivative_intertwining(w, om, f, y);
                    INFO(f.label << " / " << chi.name);
                    CHECK(r.h2 < 1e-11);
                    CHECK(r.h3 < 1e-11);
                }
            }
        }
    }
}

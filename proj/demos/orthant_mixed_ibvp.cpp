// Mixed boundary conditions on the quarter plane, driven by the character
// with bits (1,0): Dirichlet on the wall x1 = 0, Neumann on x2 = 0. Prints
// the solution profile and the kernel's behavior on both walls.

#include <cstdio>

#include "weylheat/ibvp.hpp"
#include "weylheat/io.hpp"

using namespace weylheat;

int main() {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    auto chars = enumerate_characters(w);
    const TwoCharacter* chi = resolve_character(w, chars, "1,0");

    BoundaryPartition bp = BoundaryPartition::from_character(w, *chi);
    std::printf("character 1,0 on the quarter plane:\n");
    for (std::size_t k = 0; k < bp.neumann.size(); ++k)
        std::printf("  wall of e_%zu: %s\n", k + 1, bp.neumann[k] ? "Neumann" : "Dirichlet");

    auto f = [](const Vec& yv) { return std::exp(-2.0 * norm_sq(yv - Vec{1.0, 1.0})); };
    double t = 0.2;
    std::printf("\nu(t=%.2f, x) along the diagonal:\n", t);
    for (double s : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        double u = solve_heat(w, *chi, t, Vec{s, s}, f);
        std::printf("  x=(%.2f,%.2f)  u=%.8f\n", s, s, u);
    }

    std::vector<std::vector<Vec>> samples;
    for (std::size_t k = 0; k < w.root_system().simple.size(); ++k)
        samples.push_back(facet_samples(w, static_cast<int>(k), 2, 0.2, 1));
    std::printf("\nkernel on the walls (normalized):\n");
    for (const FacetSampleReport& r : boundary_check(w, *chi, t, Vec{1.0, 1.0}, samples)) {
        std::printf("  facet %d (%s): %s = %.3e\n", r.facet, r.neumann_flagged ? "Neumann" : "Dirichlet",
                    r.neumann_flagged ? "normal derivative" : "value", r.normalized_stat);
    }
    return 0;
}

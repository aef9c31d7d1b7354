#include "catch2/catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "weylheat/characters.hpp"

using namespace weylheat;

namespace {

const TwoCharacter& by_name(const std::vector<TwoCharacter>& cs, const std::string& n) {
    for (const TwoCharacter& c : cs)
        if (c.name == n) return c;
    FAIL("character not found: " + n);
    return cs.front();
}

Mat rotation(double a) {
    Mat m(2, 2);
    m(0, 0) = std::cos(a);
    m(0, 1) = -std::sin(a);
    m(1, 0) = std::sin(a);
    m(1, 1) = std::cos(a);
    return m;
}

}  // namespace

TEST_CASE("character census") {
    CHECK(enumerate_characters(generate_group(orthogonal_roots(3, {1, 2, 3}))).size() == 8);
    CHECK(enumerate_characters(generate_group(orthogonal_roots(2, {1, 2}))).size() == 4);
    CHECK(enumerate_characters(generate_group(orthogonal_roots(1, {1}))).size() == 2);
    CHECK(enumerate_characters(generate_group(dihedral_roots(3))).size() == 2);
    CHECK(enumerate_characters(generate_group(dihedral_roots(5))).size() == 2);
    CHECK(enumerate_characters(generate_group(dihedral_roots(7))).size() == 2);
    CHECK(enumerate_characters(generate_group(dihedral_roots(4))).size() == 4);
    CHECK(enumerate_characters(generate_group(dihedral_roots(6))).size() == 4);
    CHECK(enumerate_characters(generate_group(dihedral_roots(8))).size() == 4);
}

TEST_CASE("characters are homomorphisms, distinct, with index-2 kernels") {
    for (auto rs : {dihedral_roots(4), dihedral_roots(5), orthogonal_roots(2, {1, 2})}) {
        ReflectionGroup w = generate_group(rs);
        auto cs = enumerate_characters(w);
        std::set<std::vector<int>> tables;
        bool saw_trivial = false, saw_sgn = false;
        for (const TwoCharacter& c : cs) {
            CHECK(is_homomorphism(w, c.values));
            CHECK(c.values[0] == 1);
            tables.insert(c.values);
            if (c.name == "trivial") saw_trivial = true;
            if (c.name == "sgn") saw_sgn = true;
            std::size_t ker = character_kernel(c).size();
            if (c.is_trivial())
                CHECK(ker == static_cast<std::size_t>(w.size()));
            else
                CHECK(ker == static_cast<std::size_t>(w.size()) / 2);
        }
        CHECK(tables.size() == cs.size());
        CHECK(saw_trivial);
        CHECK(saw_sgn);
    }
}

TEST_CASE("sgn and trivial") {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    TwoCharacter triv = trivial_character(w);
    for (int v : triv.values) CHECK(v == 1);

    TwoCharacter sgn = sgn_character(w);
    for (int g = 0; g < w.size(); ++g) CHECK(sgn(g) == (w.element(g).det > 0 ? 1 : -1));
    CHECK(is_homomorphism(w, sgn.values));

    // the four elements I, diag(-1,1), diag(1,-1), -I carry +1,-1,-1,+1
    Mat d1 = Mat::identity(2);
    d1(0, 0) = -1.0;
    Mat d2 = Mat::identity(2);
    d2(1, 1) = -1.0;
    Mat mI = Mat::identity(2);
    mI(0, 0) = mI(1, 1) = -1.0;
    CHECK(sgn(w.find_element(Mat::identity(2))) == 1);
    CHECK(sgn(w.find_element(d1)) == -1);
    CHECK(sgn(w.find_element(d2)) == -1);
    CHECK(sgn(w.find_element(mI)) == 1);
}

TEST_CASE("sgn on D3 separates rotations from reflections") {
    ReflectionGroup w = generate_group(dihedral_roots(3));
    TwoCharacter sgn = sgn_character(w);
    int plus = 0, minus = 0;
    for (int g = 0; g < w.size(); ++g) (sgn(g) == 1 ? plus : minus)++;
    CHECK(plus == 3);
    CHECK(minus == 3);
    for (int g = 0; g < w.size(); ++g) CHECK(sgn(g) == (w.element(g).det > 0 ? 1 : -1));
}

TEST_CASE("dihedral kernels match the normal subgroups") {
    const double pi = std::numbers::pi;
    ReflectionGroup w = generate_group(dihedral_roots(4));
    auto cs = enumerate_characters(w);

    Mat r = rotation(2 * pi / 4);
    Mat sigma = Mat::identity(2);
    sigma(0, 0) = -1.0;

    int ir = w.find_element(r);
    int is = w.find_element(sigma);
    REQUIRE(ir >= 0);
    REQUIRE(is >= 0);
    int ir2 = w.mul(ir, ir);
    int ir2s = w.mul(ir2, is);
    int irs = w.mul(ir, is);

    // sgn kernel: the rotation subgroup {1, r, r^2, r^3}
    {
        auto ker = character_kernel(by_name(cs, "sgn"));
        std::set<int> k(ker.begin(), ker.end());
        CHECK(k == std::set<int>{0, ir, ir2, w.mul(ir2, ir)});
    }
    // eta1 kernel: {1, r^2, sigma, r^2 sigma}
    {
        auto ker = character_kernel(by_name(cs, "eta1"));
        std::set<int> k(ker.begin(), ker.end());
        CHECK(k == std::set<int>{0, ir2, is, ir2s});
    }
    // eta2 kernel contains r sigma but not sigma
    {
        const TwoCharacter& eta2 = by_name(cs, "eta2");
        CHECK(eta2(irs) == 1);
        CHECK(eta2(is) == -1);
        CHECK(eta2(ir) == -1);
    }

    // odd n has no exceptional characters
    auto cs5 = enumerate_characters(generate_group(dihedral_roots(5)));
    for (const TwoCharacter& c : cs5) {
        CHECK(c.name != "eta1");
        CHECK(c.name != "eta2");
    }
}

TEST_CASE("orthogonal characters carry bit-vector names") {
    ReflectionGroup w = generate_group(orthogonal_roots(2, {1, 2}));
    auto cs = enumerate_characters(w);
    std::set<std::string> names;
    for (const TwoCharacter& c : cs) names.insert(c.name);
    CHECK(names == std::set<std::string>{"trivial", "sgn", "0,1", "1,0"});
}

TEST_CASE("character values are conjugation invariant") {
    ReflectionGroup w = generate_group(dihedral_roots(6));
    for (const TwoCharacter& chi : enumerate_characters(w)) {
        for (std::size_t k = 0; k < w.root_system().simple.size(); ++k) {
            int s = w.simple_reflection(static_cast<int>(k));
            for (int g = 0; g < w.size(); ++g) {
                int conj = w.mul(w.mul(g, s), w.inverse(g));
                CHECK(chi(conj) == chi(s));
            }
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "test_support.hpp"
#include "twistring/shapes.hpp"

using namespace twistring;

namespace {

// Witness replays: re-multiply the claimed structure and check the defining
// relations, independent of how the detector found it.

void replay_semidirect(const Group& g, const SemidirectInversionWitness& w) {
    CHECK(2 * w.h.size() == static_cast<size_t>(g.order()));
    CHECK(g.mul(w.a, w.a) == 0);
    std::uint64_t mask = g.elements_mask(w.h);
    CHECK_FALSE(bool(mask >> w.a & 1));
    int exponent = 1;
    for (int x : w.h) {
        exponent = std::lcm(exponent, g.element_order(x));
        CHECK(g.conj(x, w.a) == g.inv(x));
        for (int y : w.h) {
            CHECK(bool(mask >> g.mul(x, y) & 1));  // closed
            CHECK(g.commute(x, y));                 // abelian
        }
    }
    CHECK(exponent != 2);
}

void replay_split(const Group& g, const std::vector<int>& ambient,
                  const HamiltonianSplit& w) {
    // Q8 relations on the generators
    CHECK(g.element_order(w.gen_a) == 4);
    CHECK(g.element_order(w.gen_b) == 4);
    CHECK(g.mul(w.gen_a, w.gen_a) == g.mul(w.gen_b, w.gen_b));
    CHECK(g.conj(w.gen_a, w.gen_b) == g.inv(w.gen_a));
    CHECK(w.q8.size() == 8);
    // W is an elementary abelian complement centralizing the Q8
    for (int x : w.w) {
        CHECK(g.mul(x, x) == 0);
        for (int q : w.q8) CHECK(g.commute(x, q));
    }
    // the product map is a bijection onto the ambient subgroup
    std::set<int> hit;
    for (int q : w.q8)
        for (int x : w.w) hit.insert(g.mul(q, x));
    CHECK(hit.size() == ambient.size());
    CHECK(std::vector<int>(hit.begin(), hit.end()) == ambient);
}

void replay_yc4(const Group& g, const HamiltonianYc4Witness& w) {
    CHECK(2 * w.gamma.size() == static_cast<size_t>(g.order()));
    replay_split(g, w.gamma, w.gamma_split);
    CHECK(g.element_order(w.d) == 4);
    std::uint64_t mask = g.elements_mask(w.gamma);
    CHECK_FALSE(bool(mask >> w.d & 1));
    for (int x : w.gamma) CHECK(g.commute(w.d, x));
    // gamma' = <d^2>
    std::uint64_t seed = 1;
    for (int a : w.gamma)
        for (int b : w.gamma) seed |= 1ull << g.commutator(a, b);
    auto gprime = g.mask_elements(g.closure_mask(seed));
    CHECK(gprime == std::vector<int>{0, g.mul(w.d, w.d)});
}

void replay_extraspecial(const Group& g, const ExtraspecialWitness& w) {
    // E is extraspecial: center = commutator = frattini of order 2
    std::vector<int> zc;
    for (int x : w.e) {
        bool central = true;
        for (int y : w.e) central &= g.commute(x, y);
        if (central) zc.push_back(x);
    }
    REQUIRE(zc.size() == 2);
    int z = zc[1];
    std::uint64_t seed = 1;
    for (int a : w.e) {
        seed |= 1ull << g.mul(a, a);
        for (int b : w.e) seed |= 1ull << g.commutator(a, b);
    }
    CHECK(g.mask_elements(g.closure_mask(seed)) == zc);

    std::vector<int> factor = w.e;
    if (w.c) {
        CHECK(g.element_order(*w.c) == 4);
        CHECK(g.mul(*w.c, *w.c) == z);
        for (int x : w.e) CHECK(g.commute(*w.c, x));
        factor = g.mask_elements(
            g.closure_mask(g.elements_mask(w.e) | (1ull << *w.c)));
    }
    for (int x : w.w) {
        CHECK(g.mul(x, x) == 0);
        for (int y = 0; y < g.order(); ++y) CHECK(g.commute(x, y));
    }
    std::set<int> hit;
    for (int u : factor)
        for (int x : w.w) hit.insert(g.mul(u, x));
    CHECK(static_cast<int>(hit.size()) == g.order());
}

void replay_all(const Group& g) {
    ShapeReport r = detect_case_shapes(g);
    for (const auto& w : r.semidirect_inversion) replay_semidirect(g, w);
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    for (const auto& w : r.hamiltonian2) replay_split(g, all, w);
    for (const auto& w : r.hamiltonian_yc4) replay_yc4(g, w);
    for (const auto& w : r.extraspecial_family) replay_extraspecial(g, w);
}

}  // namespace

TEST_CASE("dihedral8 is a semidirect inversion of C4") {
    Group d8 = Group::dihedral8();
    ShapeReport r = detect_case_shapes(d8);
    CHECK_FALSE(r.abelian);
    REQUIRE_FALSE(r.semidirect_inversion.empty());
    CHECK(r.semidirect_inversion.size() == 4);  // one per reflection
    CHECK(r.semidirect_inversion.front().h == std::vector<int>{0, 1, 2, 3});
    CHECK(r.hamiltonian2.empty());
    CHECK_FALSE(r.extraspecial_family.empty());  // D8 itself is extraspecial
}

TEST_CASE("Q8 x C2 is a hamiltonian 2-group with W = C2") {
    Group g = Group::direct_product(Group::quaternion8(), Group::cyclic(2));
    ShapeReport r = detect_case_shapes(g);
    REQUIRE_FALSE(r.hamiltonian2.empty());
    CHECK(r.hamiltonian2.front().w.size() == 2);
    CHECK(r.semidirect_inversion.empty());
    CHECK(r.hamiltonian_yc4.empty());
}

TEST_CASE("S3 carries the inverting split over A3") {
    // The A3 rotation subgroup has exponent 3 and every transposition inverts
    // it, so the semidirect-inversion shape is present; the classifier still
    // rejects the case over GF(3) through the f(a) = -lambda(a,a) constraint.
    Group s3 = Group::from_table(6, oracle::s3_table());
    ShapeReport r = detect_case_shapes(s3);
    CHECK_FALSE(r.abelian);
    REQUIRE(r.semidirect_inversion.size() == 3);
    CHECK(r.semidirect_inversion.front().h == std::vector<int>{0, 1, 2});
    CHECK(r.hamiltonian2.empty());
    CHECK(r.hamiltonian_yc4.empty());
    CHECK(r.extraspecial_family.empty());
}

TEST_CASE("abelian shapes") {
    ShapeReport c6 = detect_case_shapes(Group::cyclic(6));
    CHECK(c6.abelian);
    CHECK_FALSE(c6.exp2_abelian);

    ShapeReport e8 = detect_case_shapes(Group::elementary_abelian(3));
    CHECK(e8.abelian);
    CHECK(e8.exp2_abelian);

    ShapeReport c4 = detect_case_shapes(Group::cyclic(4));
    CHECK(c4.abelian);
    CHECK_FALSE(c4.exp2_abelian);
    CHECK(c4.semidirect_inversion.empty());  // only index-2 subgroup has exponent 2
}

TEST_CASE("Q8 Y C4 decompositions") {
    Group g = Group::central_product(Group::quaternion8(), Group::cyclic(4), 2, 2);
    ShapeReport r = detect_case_shapes(g);
    REQUIRE_FALSE(r.hamiltonian_yc4.empty());
    CHECK(r.hamiltonian_yc4.size() == 2);  // d and d^3
    CHECK(r.hamiltonian2.empty());         // G itself is not hamiltonian
    REQUIRE_FALSE(r.extraspecial_family.empty());
    CHECK(r.extraspecial_family.front().c.has_value());
}

TEST_CASE("(D8 Y D8) x C2 matches only the extraspecial family") {
    Group e32 = Group::central_product(Group::dihedral8(), Group::dihedral8(), 2, 2);
    Group g = Group::direct_product(e32, Group::cyclic(2));
    ShapeReport r = detect_case_shapes(g);
    CHECK_FALSE(r.abelian);
    CHECK(r.semidirect_inversion.empty());
    CHECK(r.hamiltonian2.empty());
    CHECK(r.hamiltonian_yc4.empty());
    REQUIRE(r.extraspecial_family.size() == 1);
    const auto& w = r.extraspecial_family.front();
    CHECK(w.e.size() == 32);
    CHECK_FALSE(w.c.has_value());
    CHECK(w.w.size() == 2);
}

TEST_CASE("witness replay across the group zoo") {
    replay_all(Group::cyclic(2));
    replay_all(Group::cyclic(8));
    replay_all(Group::elementary_abelian(2));
    replay_all(Group::dihedral8());
    replay_all(Group::quaternion8());
    replay_all(Group::from_table(6, oracle::s3_table()));
    replay_all(Group::direct_product(Group::quaternion8(), Group::cyclic(2)));
    replay_all(Group::direct_product(Group::quaternion8(), Group::elementary_abelian(2)));
    replay_all(Group::direct_product(Group::dihedral8(), Group::cyclic(2)));
    replay_all(Group::central_product(Group::quaternion8(), Group::cyclic(4), 2, 2));
    replay_all(Group::central_product(Group::quaternion8(), Group::quaternion8(), 2, 2));
    Group e32 = Group::central_product(Group::dihedral8(), Group::dihedral8(), 2, 2);
    replay_all(e32);
    replay_all(Group::direct_product(e32, Group::cyclic(2)));
    replay_all(Group::semidirect_inversion(Group::cyclic(8)));
    replay_all(Group::semidirect_inversion(Group::direct_product(
        Group::cyclic(4), Group::cyclic(4))));
}

TEST_CASE("subgroup scans") {
    Group q8 = Group::quaternion8();
    Group d8 = Group::dihedral8();
    CHECK(quaternion_subgroups8(q8).size() == 1);
    CHECK(quaternion_subgroups8(d8).empty());
    CHECK(dihedral_subgroups8(d8).size() == 1);
    CHECK(dihedral_subgroups8(q8).empty());
    CHECK(index2_subgroups(d8).size() == 3);
    CHECK(index2_subgroups(Group::cyclic(3)).empty());

    Group e32 = Group::central_product(Group::dihedral8(), Group::dihedral8(), 2, 2);
    CHECK_FALSE(quaternion_subgroups8(e32).empty());  // D8 Y D8 = Q8 Y Q8
    CHECK_FALSE(dihedral_subgroups8(e32).empty());
}

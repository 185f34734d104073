#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "test_support.hpp"
#include "twistring/group.hpp"

using namespace twistring;

namespace {
std::map<int, int> order_multiset(const Group& g) {
    std::map<int, int> m;
    for (int x = 0; x < g.order(); ++x) ++m[g.element_order(x)];
    return m;
}
}  // namespace

TEST_CASE("quaternion8 defining data") {
    Group q8 = Group::quaternion8();
    CHECK(q8.order() == 8);
    std::map<int, int> expected = {{1, 1}, {2, 1}, {4, 6}};
    CHECK(order_multiset(q8) == expected);
    // b^2 = a^2 and b^-1 a b = a^-1 with a = index 1, b = index 4
    CHECK(q8.mul(4, 4) == q8.mul(1, 1));
    CHECK(q8.conj(1, 4) == q8.inv(1));
}

TEST_CASE("semidirect inversion of C4 is dihedral8") {
    Group sd = Group::semidirect_inversion(Group::cyclic(4));
    Group d8 = Group::dihedral8();
    CHECK(sd.order() == 8);
    std::map<int, int> expected = {{1, 1}, {2, 5}, {4, 2}};
    CHECK(order_multiset(sd) == expected);
    CHECK(sd.center().size() == 2);
    CHECK(oracle::isomorphic(sd, d8));
    CHECK_FALSE(oracle::isomorphic(sd, Group::quaternion8()));
}

TEST_CASE("central product Q8 Y C4") {
    Group g = Group::central_product(Group::quaternion8(), Group::cyclic(4), 2, 2);
    CHECK(g.order() == 16);
    auto z = g.center();
    CHECK(z.size() == 4);
    bool has_order4 = false;
    for (int x : z) has_order4 |= g.element_order(x) == 4;
    CHECK(has_order4);  // center is cyclic of order 4
}

TEST_CASE("central product rejects non-central identifications") {
    CHECK_THROWS_WITH_AS(
        Group::central_product(Group::quaternion8(), Group::cyclic(4), 1, 2),
        doctest::Contains("BadCentralIdentification"), AlgebraError);
    CHECK_THROWS_AS(Group::central_product(Group::dihedral8(), Group::cyclic(4), 4, 2),
                    AlgebraError);
}

TEST_CASE("semidirect inversion rejects nonabelian base") {
    CHECK_THROWS_WITH_AS(Group::semidirect_inversion(Group::quaternion8()),
                         doctest::Contains("NotAbelian"), AlgebraError);
}

TEST_CASE("structure profile of quaternion8") {
    Group q8 = Group::quaternion8();
    auto p = structure_profile(q8);
    std::vector<int> z = {0, 2};
    CHECK(p.center == z);
    CHECK(p.commutator_subgroup == z);
    REQUIRE(p.frattini_subgroup.has_value());
    CHECK(*p.frattini_subgroup == z);
    CHECK(is_extraspecial_2group(q8));
    CHECK(p.exponent == 4);
    CHECK(p.all_subgroups_normal);
}

TEST_CASE("structure profile of C2xC2") {
    auto p = structure_profile(Group::elementary_abelian(2));
    CHECK(p.is_abelian);
    CHECK(p.exponent == 2);
    CHECK(p.commutator_subgroup == std::vector<int>{0});
}

TEST_CASE("hamiltonian detection data: Q8 x C2") {
    Group g = Group::direct_product(Group::quaternion8(), Group::cyclic(2));
    CHECK_FALSE(g.is_abelian());
    CHECK(g.all_subgroups_normal());
    // cross-check against full subgroup enumeration
    for (const auto& h : oracle::all_subgroups(g)) CHECK(oracle::subgroup_is_normal(g, h));
}

TEST_CASE("dihedral8 has non-normal subgroups") {
    Group d8 = Group::dihedral8();
    CHECK_FALSE(d8.all_subgroups_normal());
    bool oracle_all_normal = true;
    for (const auto& h : oracle::all_subgroups(d8))
        oracle_all_normal &= oracle::subgroup_is_normal(d8, h);
    CHECK_FALSE(oracle_all_normal);
}

TEST_CASE("centralizers") {
    Group q8 = Group::quaternion8();
    std::vector<int> all(q8.order());
    for (int i = 0; i < q8.order(); ++i) all[i] = i;

    CHECK(q8.centralizer({0}).size() == 8);                  // identity centralizes all
    CHECK(q8.centralizer({1}) == std::vector<int>{0, 1, 2, 3});  // C(i) = <i>

    Group c6 = Group::cyclic(6);
    CHECK(c6.centralizer({3}).size() == 6);
    CHECK_THROWS_AS(c6.centralizer({}), AlgebraError);
}

TEST_CASE("explicit tables are audited") {
    // corrupt one entry of C3: breaks associativity or inverses
    std::vector<int> bad = {0, 1, 2, 1, 2, 0, 2, 0, 0};
    CHECK_THROWS_WITH_AS(Group::from_table(3, bad), doctest::Contains("InvalidTable"),
                         AlgebraError);
    // identity not at index 0
    std::vector<int> shifted = {1, 0, 0, 1};
    CHECK_THROWS_AS(Group::from_table(2, shifted), AlgebraError);
    // a valid explicit table: S3 from permutation composition
    Group s3 = Group::from_table(6, oracle::s3_table());
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.exponent() == 6);
}

TEST_CASE("frattini is restricted to 2-groups") {
    CHECK_THROWS_WITH_AS(Group::cyclic(6).frattini_subgroup(),
                         doctest::Contains("FrattiniUnsupported"), AlgebraError);
    auto p = structure_profile(Group::cyclic(6));
    CHECK_FALSE(p.frattini_subgroup.has_value());
}

TEST_CASE("center lies in every centralizer; commutator detects abelianness") {
    std::vector<Group> zoo;
    zoo.push_back(Group::cyclic(6));
    zoo.push_back(Group::dihedral8());
    zoo.push_back(Group::quaternion8());
    zoo.push_back(Group::from_table(6, oracle::s3_table()));
    zoo.push_back(Group::elementary_abelian(3));
    std::mt19937_64 rng(23);
    for (const Group& g : zoo) {
        auto z = g.center();
        std::uint64_t zmask = g.elements_mask(z);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> s;
            for (int i = 0; i < 3; ++i) s.push_back(static_cast<int>(rng() % g.order()));
            std::uint64_t cmask = g.elements_mask(g.centralizer(s));
            CHECK((zmask & ~cmask) == 0);
        }
        CHECK((g.commutator_subgroup() == std::vector<int>{0}) == g.is_abelian());
    }
}

TEST_CASE("order bound is enforced") {
    CHECK_THROWS_WITH_AS(
        Group::direct_product(Group::quaternion8(), Group::cyclic(9)),
        doctest::Contains("UnsupportedOrder"), AlgebraError);
    CHECK(Group::direct_product(Group::quaternion8(), Group::elementary_abelian(3))
              .order() == 64);
}

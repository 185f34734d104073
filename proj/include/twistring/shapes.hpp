#pragma once

#include <optional>
#include <vector>

#include "twistring/group.hpp"

namespace twistring {

// The six structural case shapes the classifier distinguishes.
enum class CaseTag {
    Abelian = 1,
    ExpTwoAbelian = 2,
    SemidirectInversion = 3,
    Hamiltonian2 = 4,
    HamiltonianYC4 = 5,
    ExtraspecialFamily = 6,
};

const char* case_tag_name(CaseTag tag);

/// G = H x| <a>, H abelian of exponent != 2, a an involution inverting H.
struct SemidirectInversionWitness {
    std::vector<int> h;
    int a = -1;
};

/// G = Q8 x W with exp(W) | 2; gen_a, gen_b generate the Q8 factor.
struct HamiltonianSplit {
    int gen_a = -1;
    int gen_b = -1;
    std::vector<int> q8;
    std::vector<int> w;
};

/// G = Gamma Y C4: Gamma a hamiltonian 2-group of index 2, d central of
/// order 4 outside Gamma with Gamma' = <d^2>.
struct HamiltonianYc4Witness {
    std::vector<int> gamma;
    HamiltonianSplit gamma_split;
    int d = -1;
};

/// G = E x W or (E Y C4) x W: E extraspecial, exp(W) | 2, and when present
/// c is central of order 4 with E' = <c^2>.
struct ExtraspecialWitness {
    std::vector<int> e;
    std::optional<int> c;
    std::vector<int> w;
};

struct ShapeReport {
    bool abelian = false;
    bool exp2_abelian = false;
    std::vector<SemidirectInversionWitness> semidirect_inversion;
    std::vector<HamiltonianSplit> hamiltonian2;
    std::vector<HamiltonianYc4Witness> hamiltonian_yc4;
    std::vector<ExtraspecialWitness> extraspecial_family;

    bool none() const {
        return !abelian && !exp2_abelian && semidirect_inversion.empty() &&
               hamiltonian2.empty() && hamiltonian_yc4.empty() &&
               extraspecial_family.empty();
    }
    std::vector<CaseTag> tags() const;
};

ShapeReport detect_case_shapes(const Group& g);

// Building blocks, also used by the classifier and tests.
std::vector<std::vector<int>> index2_subgroups(const Group& g);
std::vector<HamiltonianSplit> hamiltonian_splits(const Group& g,
                                                 const std::vector<int>& ambient);
std::vector<std::vector<int>> quaternion_subgroups8(const Group& g);
std::vector<std::vector<int>> dihedral_subgroups8(const Group& g);

}  // namespace twistring

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistring/errors.hpp"

namespace twistring {

/// A finite group of order <= 64 as an indexed Cayley table. Index 0 is
/// always the identity. Every constructor runs the full table audit
/// (identity, two-sided inverses, associativity over all order^3 triples),
/// so a constructed Group is a group. Immutable afterwards.
class Group {
public:
    static Group from_table(int order, std::vector<int> mul,
                            std::vector<std::string> labels = {});
    static Group cyclic(int n);
    static Group elementary_abelian(int k);  // C2^k, elements are bitmasks, mul = xor
    static Group dihedral8();
    static Group quaternion8();
    static Group direct_product(const Group& a, const Group& b);
    // H x| <t>, t^2 = 1 acting by inversion; requires H abelian.
    // Indices [0, |H|) are H, |H| + h is h*t.
    static Group semidirect_inversion(const Group& h);
    // (A x B) / <(za, zb)> for central involutions za, zb. Coset
    // representatives are indexed by their minimal flat pair index, so the
    // identity coset stays at index 0.
    static Group central_product(const Group& a, const Group& b, int za, int zb);

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int g) const { return inv_[g]; }
    int element_order(int g) const { return element_order_[g]; }
    int conj(int x, int y) const { return mul(mul(inv(y), x), y); }  // x^y
    int commutator(int a, int b) const {
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
    const std::string& label(int g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_abelian() const;
    int exponent() const;
    std::vector<int> center() const;
    std::vector<int> centralizer(const std::vector<int>& s) const;
    std::vector<int> commutator_subgroup() const;
    std::vector<int> frattini_subgroup() const;  // 2-groups only
    // every subgroup normal <=> every cyclic subgroup normal
    bool all_subgroups_normal() const;

    std::vector<int> closure(const std::vector<int>& gens) const;
    std::uint64_t closure_mask(std::uint64_t seed) const;
    std::vector<int> mask_elements(std::uint64_t mask) const;
    std::uint64_t elements_mask(const std::vector<int>& elems) const;

private:
    Group() = default;
    void finish(std::vector<std::string> labels);  // audit + derived data

    int n_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<int> element_order_;
    std::vector<std::string> labels_;
};

struct StructureProfile {
    bool is_abelian = false;
    int exponent = 1;
    std::vector<int> center;
    std::vector<int> commutator_subgroup;
    std::optional<std::vector<int>> frattini_subgroup;  // only for 2-groups
    bool all_subgroups_normal = false;
};

StructureProfile structure_profile(const Group& g);

// center = commutator = frattini, all of order p (here p = 2)
bool is_extraspecial_2group(const Group& g);

}  // namespace twistring

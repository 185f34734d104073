#include "twistring/shapes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace twistring {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int parity(unsigned x) { return std::popcount(x) & 1; }

// Basis and F2 coordinates of an elementary abelian subgroup.
struct F2Space {
    std::vector<int> basis;
    std::map<int, unsigned> coord;  // element -> bitmask over basis
};

F2Space f2_space(const Group& g, const std::vector<int>& subgroup) {
    F2Space space;
    space.coord[0] = 0;
    for (int e : subgroup) {
        if (space.coord.count(e)) continue;
        unsigned bit = 1u << space.basis.size();
        space.basis.push_back(e);
        auto snapshot = space.coord;
        for (const auto& [x, cx] : snapshot) space.coord[g.mul(x, e)] = cx | bit;
    }
    return space;
}

// Hyperplanes of an elementary abelian subgroup that avoid `avoid`,
// in functional-index order.
std::vector<std::vector<int>> hyperplanes_avoiding(const Group& g,
                                                   const std::vector<int>& subgroup,
                                                   int avoid) {
    F2Space space = f2_space(g, subgroup);
    unsigned m = static_cast<unsigned>(space.basis.size());
    std::vector<std::vector<int>> result;
    for (unsigned phi = 1; phi < (1u << m); ++phi) {
        if (parity(phi & space.coord.at(avoid)) == 0) continue;
        std::vector<int> w;
        for (int x : subgroup)
            if (parity(phi & space.coord.at(x)) == 0) w.push_back(x);
        std::sort(w.begin(), w.end());
        result.push_back(std::move(w));
    }
    return result;
}

std::vector<int> subgroup_center(const Group& g, const std::vector<int>& elems) {
    std::vector<int> result;
    for (int x : elems) {
        bool ok = true;
        for (int y : elems)
            if (!g.commute(x, y)) {
                ok = false;
                break;
            }
        if (ok) result.push_back(x);
    }
    return result;
}

std::vector<int> subgroup_commutator(const Group& g, const std::vector<int>& elems) {
    std::uint64_t seed = 1;
    for (int a : elems)
        for (int b : elems) seed |= 1ull << g.commutator(a, b);
    return g.mask_elements(g.closure_mask(seed));
}

std::vector<int> subgroup_frattini_2group(const Group& g,
                                          const std::vector<int>& elems) {
    std::uint64_t seed = 1;
    for (int a : elems) {
        seed |= 1ull << g.mul(a, a);
        for (int b : elems) seed |= 1ull << g.commutator(a, b);
    }
    return g.mask_elements(g.closure_mask(seed));
}

int subgroup_exponent(const Group& g, const std::vector<int>& elems) {
    int e = 1;
    for (int x : elems) e = std::lcm(e, g.element_order(x));
    return e;
}

// Checks that (u, w) -> u*w is a bijection factor x w -> g.
bool direct_decomposition(const Group& g, const std::vector<int>& factor,
                          const std::vector<int>& w) {
    if (static_cast<int>(factor.size() * w.size()) != g.order()) return false;
    std::vector<char> seen(g.order(), 0);
    for (int u : factor)
        for (int x : w) {
            int p = g.mul(u, x);
            if (seen[p]) return false;
            seen[p] = 1;
        }
    return true;
}

}  // namespace

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Abelian: return "abelian";
        case CaseTag::ExpTwoAbelian: return "exp2_abelian";
        case CaseTag::SemidirectInversion: return "semidirect_inversion";
        case CaseTag::Hamiltonian2: return "hamiltonian2";
        case CaseTag::HamiltonianYC4: return "hamiltonian_yc4";
        case CaseTag::ExtraspecialFamily: return "extraspecial_family";
    }
    return "?";
}

std::vector<CaseTag> ShapeReport::tags() const {
    std::vector<CaseTag> t;
    if (abelian) t.push_back(CaseTag::Abelian);
    if (exp2_abelian) t.push_back(CaseTag::ExpTwoAbelian);
    if (!semidirect_inversion.empty()) t.push_back(CaseTag::SemidirectInversion);
    if (!hamiltonian2.empty()) t.push_back(CaseTag::Hamiltonian2);
    if (!hamiltonian_yc4.empty()) t.push_back(CaseTag::HamiltonianYC4);
    if (!extraspecial_family.empty()) t.push_back(CaseTag::ExtraspecialFamily);
    return t;
}

std::vector<std::vector<int>> index2_subgroups(const Group& g) {
    int n = g.order();
    // index-2 subgroups contain every square and commutator
    std::uint64_t seed = 1;
    for (int a = 0; a < n; ++a) {
        seed |= 1ull << g.mul(a, a);
        for (int b = 0; b < n; ++b) seed |= 1ull << g.commutator(a, b);
    }
    std::uint64_t nmask = g.closure_mask(seed);
    std::vector<int> nelems = g.mask_elements(nmask);
    if (static_cast<int>(nelems.size()) == n) return {};

    // cosets of N; the quotient is elementary abelian of exponent 2
    std::vector<int> coset_id(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_id[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : nelems) coset_id[g.mul(m, x)] = id;
    }
    int vsize = static_cast<int>(reps.size());

    // greedy F2 basis of the quotient, with coordinates per coset
    std::vector<int> vcoord(vsize, -1);
    vcoord[coset_id[0]] = 0;
    std::vector<int> basis_reps;
    for (int v = 0; v < vsize; ++v) {
        int rep = reps[v];
        if (vcoord[coset_id[rep]] >= 0) continue;
        unsigned bit = 1u << basis_reps.size();
        basis_reps.push_back(rep);
        std::vector<std::pair<int, unsigned>> snapshot;
        for (int u = 0; u < vsize; ++u)
            if (vcoord[u] >= 0) snapshot.push_back({u, (unsigned)vcoord[u]});
        for (auto [u, cu] : snapshot)
            vcoord[coset_id[g.mul(reps[u], rep)]] = static_cast<int>(cu | bit);
    }

    unsigned k = static_cast<unsigned>(basis_reps.size());
    std::vector<std::vector<int>> result;
    for (unsigned phi = 1; phi < (1u << k); ++phi) {
        std::vector<int> h;
        for (int x = 0; x < n; ++x)
            if (parity(phi & (unsigned)vcoord[coset_id[x]]) == 0) h.push_back(x);
        result.push_back(std::move(h));
    }
    return result;
}

std::vector<HamiltonianSplit> hamiltonian_splits(const Group& g,
                                                 const std::vector<int>& ambient) {
    std::vector<HamiltonianSplit> splits;
    std::set<std::uint64_t> seen_q8;
    std::uint64_t ambient_mask = g.elements_mask(ambient);

    for (int a : ambient) {
        if (g.element_order(a) != 4) continue;
        for (int b : ambient) {
            if (g.element_order(b) != 4) continue;
            if (g.mul(a, a) != g.mul(b, b)) continue;
            if (g.conj(a, b) != g.inv(a)) continue;
            std::uint64_t q8_mask = g.closure_mask((1ull << a) | (1ull << b));
            if (std::popcount(q8_mask) != 8) continue;
            if ((q8_mask & ~ambient_mask) != 0) continue;
            if (!seen_q8.insert(q8_mask).second) continue;

            // centralizer of the Q8 within the ambient subgroup
            std::vector<int> c;
            for (int x : ambient)
                if (g.commute(x, a) && g.commute(x, b)) c.push_back(x);
            bool exp2 = true;
            for (int x : c)
                if (g.mul(x, x) != 0) {
                    exp2 = false;
                    break;
                }
            if (!exp2) continue;
            if (8 * c.size() != 2 * ambient.size()) continue;

            int z = g.mul(a, a);
            for (auto& w : hyperplanes_avoiding(g, c, z)) {
                std::vector<int> q8 = g.mask_elements(q8_mask);
                // product map Q8 x W -> ambient must be a bijection
                std::set<int> hit;
                bool ok = true;
                for (int q : q8)
                    for (int x : w) {
                        int p = g.mul(q, x);
                        if (!(ambient_mask >> p & 1) || !hit.insert(p).second) {
                            ok = false;
                            break;
                        }
                    }
                if (ok && hit.size() == ambient.size()) {
                    splits.push_back({a, b, std::move(q8), w});
                    break;  // first valid complement per Q8
                }
            }
        }
    }
    return splits;
}

std::vector<std::vector<int>> quaternion_subgroups8(const Group& g) {
    std::vector<std::vector<int>> result;
    std::set<std::uint64_t> seen;
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        if (g.element_order(a) != 4) continue;
        for (int b = 0; b < n; ++b) {
            if (g.element_order(b) != 4) continue;
            if (g.mul(a, a) != g.mul(b, b)) continue;
            if (g.conj(a, b) != g.inv(a)) continue;
            std::uint64_t mask = g.closure_mask((1ull << a) | (1ull << b));
            if (std::popcount(mask) != 8) continue;
            if (seen.insert(mask).second) result.push_back(g.mask_elements(mask));
        }
    }
    return result;
}

std::vector<std::vector<int>> dihedral_subgroups8(const Group& g) {
    std::vector<std::vector<int>> result;
    std::set<std::uint64_t> seen;
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        if (g.element_order(a) != 4) continue;
        for (int b = 0; b < n; ++b) {
            if (g.element_order(b) != 2) continue;
            if (g.conj(a, b) != g.inv(a)) continue;
            std::uint64_t mask = g.closure_mask((1ull << a) | (1ull << b));
            if (std::popcount(mask) != 8) continue;
            if (seen.insert(mask).second) result.push_back(g.mask_elements(mask));
        }
    }
    return result;
}

namespace {

std::vector<SemidirectInversionWitness> semidirect_witnesses(const Group& g) {
    std::vector<SemidirectInversionWitness> found;
    for (auto& h : index2_subgroups(g)) {
        bool abelian = true;
        for (size_t i = 0; i < h.size() && abelian; ++i)
            for (size_t j = i + 1; j < h.size(); ++j)
                if (!g.commute(h[i], h[j])) {
                    abelian = false;
                    break;
                }
        if (!abelian || subgroup_exponent(g, h) == 2) continue;
        std::uint64_t hmask = g.elements_mask(h);
        for (int a = 0; a < g.order(); ++a) {
            if ((hmask >> a & 1) || g.element_order(a) != 2) continue;
            bool inverts = true;
            for (int x : h)
                if (g.conj(x, a) != g.inv(x)) {
                    inverts = false;
                    break;
                }
            if (inverts) found.push_back({h, a});
        }
    }
    return found;
}

std::vector<HamiltonianYc4Witness> hamiltonian_yc4_witnesses(const Group& g) {
    std::vector<HamiltonianYc4Witness> found;
    for (auto& gamma : index2_subgroups(g)) {
        auto splits = hamiltonian_splits(g, gamma);
        if (splits.empty()) continue;
        auto gprime = subgroup_commutator(g, gamma);
        if (gprime.size() != 2) continue;
        int z = gprime[1];
        std::uint64_t gmask = g.elements_mask(gamma);
        for (int d = 0; d < g.order(); ++d) {
            if ((gmask >> d & 1) || g.element_order(d) != 4) continue;
            if (g.mul(d, d) != z) continue;
            bool central = true;
            for (int x : gamma)
                if (!g.commute(d, x)) {
                    central = false;
                    break;
                }
            if (central) found.push_back({gamma, splits.front(), d});
        }
    }
    return found;
}

// Decomposes G as E x W or (E Y C4) x W for an extraspecial E, when G is a
// nonabelian 2-group with G' = Phi(G) of order 2. E is generated by lifting
// a symplectic basis of G/Z(G) under the commutator form; the resulting
// decomposition is then audited element by element.
std::vector<ExtraspecialWitness> extraspecial_witnesses(const Group& g) {
    int n = g.order();
    if (!is_power_of_two(n) || g.is_abelian()) return {};
    auto gprime = g.commutator_subgroup();
    if (gprime.size() != 2) return {};
    int z = gprime[1];
    if (g.frattini_subgroup() != gprime) return {};

    auto center = g.center();
    std::uint64_t zmask = g.elements_mask(center);

    // coset representatives for V = G/Z (lowest element of each coset)
    std::vector<int> coset_rep(n, -1);
    for (int x = 0; x < n; ++x) {
        if (coset_rep[x] >= 0) continue;
        for (int m : center) coset_rep[g.mul(m, x)] = x;
    }

    // greedy basis of V, as group-element representatives
    std::vector<int> gens;
    {
        std::set<int> span = {0};  // canonical reps in the span
        for (int x = 0; x < n; ++x) {
            if (coset_rep[x] != x || span.count(x)) continue;
            gens.push_back(x);
            std::set<int> snapshot = span;
            for (int s : snapshot) span.insert(coset_rep[g.mul(s, x)]);
        }
    }

    // symplectic pairing under B(x,y) = ([x,y] != 1)
    auto pairs_with = [&](int x, int y) { return g.commutator(x, y) != 0; };
    std::vector<std::pair<int, int>> pairs;
    while (!gens.empty()) {
        int a = gens.front();
        size_t bj = 0;
        for (size_t j = 1; j < gens.size(); ++j)
            if (pairs_with(a, gens[j])) {
                bj = j;
                break;
            }
        if (bj == 0) return {};  // form degenerate; not this family
        int b = gens[bj];
        std::vector<int> rest;
        for (size_t j = 1; j < gens.size(); ++j) {
            if (j == bj) continue;
            int u = gens[j];
            if (pairs_with(u, b)) u = g.mul(u, a);
            if (pairs_with(u, a)) u = g.mul(u, b);
            if (zmask >> coset_rep[u] & 1) return {};
            rest.push_back(u);
        }
        pairs.push_back({a, b});
        gens = std::move(rest);
    }

    std::uint64_t eseed = 1;
    for (auto [a, b] : pairs) eseed |= (1ull << a) | (1ull << b);
    auto e = g.mask_elements(g.closure_mask(eseed));

    std::vector<int> center_of_e = subgroup_center(g, e);
    std::vector<int> expected = {0, z};
    if (center_of_e != expected || subgroup_commutator(g, e) != expected ||
        subgroup_frattini_2group(g, e) != expected)
        return {};

    // central element of order 4 forces the (E Y C4) x W branch
    std::optional<int> c;
    for (int x : center)
        if (g.element_order(x) == 4) {
            c = x;
            break;
        }

    std::vector<int> factor = e;
    if (c) {
        if (g.mul(*c, *c) != z) return {};
        factor = g.mask_elements(g.closure_mask(g.elements_mask(e) | (1ull << *c)));
    }
    std::vector<int> omega;  // involutions of the center, plus identity
    for (int x : center)
        if (g.mul(x, x) == 0) omega.push_back(x);

    for (auto& w : hyperplanes_avoiding(g, omega, z))
        if (direct_decomposition(g, factor, w)) return {{e, c, w}};
    return {};
}

}  // namespace

ShapeReport detect_case_shapes(const Group& g) {
    ShapeReport report;
    report.abelian = g.is_abelian();
    report.exp2_abelian = report.abelian && g.exponent() <= 2;
    report.semidirect_inversion = semidirect_witnesses(g);
    report.hamiltonian2 = hamiltonian_splits(g, g.mask_elements(~0ull >> (64 - g.order())));
    report.hamiltonian_yc4 = hamiltonian_yc4_witnesses(g);
    report.extraspecial_family = extraspecial_witnesses(g);
    return report;
}

}  // namespace twistring

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twistring/group.hpp"
#include "twistring/ring.hpp"

namespace twistring {

/// theta: G -> U(K) with theta(1) = 1, used for diagonal equivalence.
class DiagonalMap {
public:
    DiagonalMap(const Group& g, const Ring& k, std::vector<int> values);
    static DiagonalMap identity(const Group& g, const Ring& k);

    const Group& group() const { return *group_; }
    const Ring& ring() const { return *ring_; }
    RingElem at(int g) const { return {values_[g], ring_}; }
    const std::vector<int>& values() const { return values_; }
    DiagonalMap inverse_map() const;

private:
    const Group* group_;
    const Ring* ring_;
    std::vector<int> values_;
};

/// A normalized factor system: a |G| x |G| table of units lambda_{g,h}
/// satisfying lambda_{a,b} lambda_{ab,c} = lambda_{b,c} lambda_{a,bc} with
/// lambda_{a,1} = lambda_{1,b} = 1. Construction always re-runs the full
/// audit, so a FactorSystem in hand is valid. Entries are stored
/// materialized: order <= 64 means at most 4096 residues.
class FactorSystem {
public:
    static FactorSystem validate(const std::vector<int>& table, const Group& g,
                                 const Ring& k);
    static FactorSystem trivial(const Group& g, const Ring& k);
    // u_x^2 = u_y^2 = -1, u_x u_y = -u_y u_x on C2 x C2 (indices 1, 2)
    static FactorSystem quaternion_c2c2(const Group& g, const Ring& k);
    // no audit; for diagnostics and negative tests only
    static FactorSystem from_table_unchecked(std::vector<int> table, const Group& g,
                                             const Ring& k);

    const Group& group() const { return *group_; }
    const Ring& ring() const { return *ring_; }
    RingElem at(int g, int h) const { return {table_[g * group_->order() + h], ring_}; }
    int value(int g, int h) const { return table_[g * group_->order() + h]; }
    const std::vector<int>& entries() const { return table_; }

private:
    FactorSystem(const Group& g, const Ring& k, std::vector<int> table)
        : group_(&g), ring_(&k), table_(std::move(table)) {}

    const Group* group_;
    const Ring* ring_;
    std::vector<int> table_;
};

bool same_context(const FactorSystem& a, const FactorSystem& b);
bool equal_entries(const FactorSystem& a, const FactorSystem& b);

/// Normalizes a raw cocycle table mu to lambda_{a,b} = mu_{1,1}^{-1} mu_{a,b}.
FactorSystem normalize(const std::vector<int>& raw, const Group& g, const Ring& k);

/// lambda'_{a,b} = theta(a) theta(b) lambda_{a,b} theta(ab)^{-1}.
FactorSystem diagonal_transform(const FactorSystem& lambda, const DiagonalMap& theta);

/// The coboundary of theta: diagonal transform of the trivial system.
FactorSystem coboundary(const DiagonalMap& theta);

/// All (g,h) in `pairs` (default: every pair) with lambda_{g,h} != lambda_{h,g},
/// in the order given (default row-major).
std::vector<std::pair<int, int>> symmetry_report(const FactorSystem& lambda);
std::vector<std::pair<int, int>> symmetry_report(
    const FactorSystem& lambda, const std::vector<std::pair<int, int>>& pairs);

/// Exhaustive enumeration of every normalized factor system of G over U(K),
/// by backtracking over the (|G|-1)^2 free entries in row-major order with
/// the cocycle identity checked as soon as each triple completes. Requires
/// |G| <= 4; raises BudgetExceeded if more than `budget` systems exist.
std::vector<FactorSystem> enumerate_cocycles(const Group& g, const Ring& k,
                                             std::size_t budget = 1u << 20);

/// Sampling mode for larger groups: built-in families composed with
/// pseudo-random diagonal twists. Every output is a valid cocycle.
std::vector<FactorSystem> sample_cocycles(const Group& g, const Ring& k,
                                          std::size_t count, std::uint64_t seed);

DiagonalMap random_diagonal_map(const Group& g, const Ring& k, std::uint64_t seed);

}  // namespace twistring

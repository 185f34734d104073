#include "twistring/cocycle.hpp"

#include <algorithm>
#include <random>

namespace twistring {

DiagonalMap::DiagonalMap(const Group& g, const Ring& k, std::vector<int> values)
    : group_(&g), ring_(&k), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != g.order())
        throw AlgebraError(errc::InvalidDiagonalMap, "theta size differs from group order");
    for (int& v : values_) v = k.reduce(v);
    if (values_[0] != k.reduce(1))
        throw AlgebraError(errc::InvalidDiagonalMap, "theta(1) must be 1");
    for (int x = 0; x < g.order(); ++x)
        if (!k.is_unit(values_[x]))
            throw AlgebraError(errc::InvalidDiagonalMap, "theta value is not a unit", {x});
}

DiagonalMap DiagonalMap::identity(const Group& g, const Ring& k) {
    return DiagonalMap(g, k, std::vector<int>(g.order(), k.reduce(1)));
}

DiagonalMap DiagonalMap::inverse_map() const {
    std::vector<int> inv(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) inv[i] = ring_->inverse(values_[i]);
    return DiagonalMap(*group_, *ring_, std::move(inv));
}

FactorSystem FactorSystem::validate(const std::vector<int>& table, const Group& g,
                                    const Ring& k) {
    int n = g.order();
    if (static_cast<int>(table.size()) != n * n)
        throw AlgebraError(errc::NonUnitEntry, "table size is not order^2");
    std::vector<int> t(table);
    for (int& v : t) v = k.reduce(v);

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!k.is_unit(t[a * n + b]))
                throw AlgebraError(errc::NonUnitEntry,
                                   "entry is not a unit of " + k.describe(), {a, b});
    int one = k.reduce(1);
    for (int a = 0; a < n; ++a) {
        if (t[a * n] != one)
            throw AlgebraError(errc::NotNormalized, "lambda(a,1) != 1", {a, 0});
        if (t[a] != one)
            throw AlgebraError(errc::NotNormalized, "lambda(1,b) != 1", {0, a});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = k.mul(t[a * n + b], t[g.mul(a, b) * n + c]);
                int rhs = k.mul(t[b * n + c], t[a * n + g.mul(b, c)]);
                if (lhs != rhs)
                    throw AlgebraError(errc::CocycleViolation,
                                       "cocycle identity fails", {a, b, c});
            }
    return FactorSystem(g, k, std::move(t));
}

FactorSystem FactorSystem::trivial(const Group& g, const Ring& k) {
    return FactorSystem(g, k, std::vector<int>(g.order() * g.order(), k.reduce(1)));
}

FactorSystem FactorSystem::quaternion_c2c2(const Group& g, const Ring& k) {
    if (g.order() != 4 || !g.is_abelian() || g.exponent() != 2)
        throw AlgebraError(errc::ContextMismatch,
                           "quaternion_c2c2 needs the Klein four-group");
    int one = k.reduce(1), minus = k.reduce(-1);
    int n = 4;
    std::vector<int> t(n * n, one);
    // basis units x=1, y=2, xy=3 multiply like the quaternions i, j, k
    t[1 * n + 1] = minus;
    t[2 * n + 2] = minus;
    t[3 * n + 3] = minus;
    t[2 * n + 1] = minus;  // ji = -k
    t[1 * n + 3] = minus;  // ik = -j
    t[3 * n + 2] = minus;  // kj = -i
    return validate(t, g, k);
}

FactorSystem FactorSystem::from_table_unchecked(std::vector<int> table, const Group& g,
                                                const Ring& k) {
    for (int& v : table) v = k.reduce(v);
    return FactorSystem(g, k, std::move(table));
}

bool same_context(const FactorSystem& a, const FactorSystem& b) {
    return &a.group() == &b.group() && a.ring() == b.ring();
}

bool equal_entries(const FactorSystem& a, const FactorSystem& b) {
    return same_context(a, b) && a.entries() == b.entries();
}

FactorSystem normalize(const std::vector<int>& raw, const Group& g, const Ring& k) {
    int n = g.order();
    if (static_cast<int>(raw.size()) != n * n)
        throw AlgebraError(errc::NonUnitEntry, "table size is not order^2");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!k.is_unit(k.reduce(raw[a * n + b])))
                throw AlgebraError(errc::NonUnitEntry,
                                   "entry is not a unit of " + k.describe(), {a, b});
    int scale = k.inverse(k.reduce(raw[0]));
    std::vector<int> t(n * n);
    for (int i = 0; i < n * n; ++i) t[i] = k.mul(scale, k.reduce(raw[i]));
    return FactorSystem::validate(t, g, k);
}

FactorSystem diagonal_transform(const FactorSystem& lambda, const DiagonalMap& theta) {
    const Group& g = lambda.group();
    const Ring& k = lambda.ring();
    if (&theta.group() != &g || !(theta.ring() == k))
        throw AlgebraError(errc::ContextMismatch, "theta context differs from lambda");
    int n = g.order();
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v = k.mul(theta.at(a).value, theta.at(b).value);
            v = k.mul(v, lambda.value(a, b));
            v = k.mul(v, k.inverse(theta.at(g.mul(a, b)).value));
            t[a * n + b] = v;
        }
    return FactorSystem::validate(t, g, k);
}

FactorSystem coboundary(const DiagonalMap& theta) {
    return diagonal_transform(FactorSystem::trivial(theta.group(), theta.ring()), theta);
}

std::vector<std::pair<int, int>> symmetry_report(const FactorSystem& lambda) {
    std::vector<std::pair<int, int>> pairs;
    int n = lambda.group().order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) pairs.push_back({a, b});
    return symmetry_report(lambda, pairs);
}

std::vector<std::pair<int, int>> symmetry_report(
    const FactorSystem& lambda, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::pair<int, int>> bad;
    for (auto [a, b] : pairs)
        if (lambda.value(a, b) != lambda.value(b, a)) bad.push_back({a, b});
    return bad;
}

std::vector<FactorSystem> enumerate_cocycles(const Group& g, const Ring& k,
                                             std::size_t budget) {
    int n = g.order();
    if (n > 4)
        throw AlgebraError(errc::TooLargeForExhaustive,
                           "exhaustive enumeration requires |G| <= 4, got order " +
                               std::to_string(n));
    int one = k.reduce(1);
    int free_count = (n - 1) * (n - 1);
    auto pos_of = [&](int a, int b) {  // free-entry position, -1 for fixed entries
        return (a == 0 || b == 0) ? -1 : (a - 1) * (n - 1) + (b - 1);
    };

    // bucket each triple of identity (1) under the last free entry it touches
    struct Triple {
        int a, b, c;
    };
    std::vector<std::vector<Triple>> due(free_count);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int last = std::max({pos_of(a, b), pos_of(g.mul(a, b), c),
                                     pos_of(b, c), pos_of(a, g.mul(b, c))});
                if (last >= 0) due[last].push_back({a, b, c});
                // triples touching only fixed entries reduce to 1 = 1
            }

    std::vector<int> table(n * n, one);
    std::vector<FactorSystem> out;
    const auto& units = k.units();

    auto consistent_at = [&](int pos) {
        for (const Triple& t : due[pos]) {
            int lhs = k.mul(table[t.a * n + t.b], table[g.mul(t.a, t.b) * n + t.c]);
            int rhs = k.mul(table[t.b * n + t.c], table[t.a * n + g.mul(t.b, t.c)]);
            if (lhs != rhs) return false;
        }
        return true;
    };

    // row-major backtracking over the free entries
    std::vector<int> choice(free_count, 0);
    int pos = 0;
    if (free_count == 0) {
        out.push_back(FactorSystem::validate(table, g, k));
        return out;
    }
    while (pos >= 0) {
        if (choice[pos] == static_cast<int>(units.size())) {
            choice[pos] = 0;
            --pos;
            if (pos >= 0) ++choice[pos];
            continue;
        }
        int a = pos / (n - 1) + 1, b = pos % (n - 1) + 1;
        table[a * n + b] = units[choice[pos]];
        if (!consistent_at(pos)) {
            ++choice[pos];
            continue;
        }
        if (pos + 1 == free_count) {
            if (out.size() == budget)
                throw AlgebraError(errc::BudgetExceeded,
                                   "more than " + std::to_string(budget) +
                                       " factor systems exist");
            out.push_back(FactorSystem::validate(table, g, k));
            ++choice[pos];
        } else {
            ++pos;
        }
    }
    return out;
}

DiagonalMap random_diagonal_map(const Group& g, const Ring& k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto& units = k.units();
    std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
    std::vector<int> values(g.order());
    values[0] = k.reduce(1);
    for (int x = 1; x < g.order(); ++x) values[x] = units[pick(rng)];
    return DiagonalMap(g, k, std::move(values));
}

std::vector<FactorSystem> sample_cocycles(const Group& g, const Ring& k,
                                          std::size_t count, std::uint64_t seed) {
    std::vector<FactorSystem> families;
    families.push_back(FactorSystem::trivial(g, k));
    if (g.order() == 4 && g.is_abelian() && g.exponent() == 2)
        families.push_back(FactorSystem::quaternion_c2c2(g, k));

    std::mt19937_64 rng(seed);
    std::vector<FactorSystem> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const FactorSystem& base = families[i % families.size()];
        DiagonalMap theta = random_diagonal_map(g, k, rng());
        out.push_back(diagonal_transform(base, theta));
    }
    return out;
}

}  // namespace twistring

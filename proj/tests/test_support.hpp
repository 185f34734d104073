#pragma once

// Shared brute-force oracles for the test suite. Everything here is
// independent of the library's implementation paths: subgroups are
// enumerated by closure search, cocycles by filtering all candidate tables
// against the defining identity, isomorphism by backtracking over bijections.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "twistring/cocycle.hpp"
#include "twistring/group.hpp"

namespace oracle {

using twistring::Group;
using twistring::Ring;

// All subgroups of g, as sorted element lists (closure BFS; small orders only).
inline std::vector<std::vector<int>> all_subgroups(const Group& g) {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue = {1ull};
    seen.insert(1ull);
    while (!queue.empty()) {
        std::uint64_t mask = queue.back();
        queue.pop_back();
        for (int x = 0; x < g.order(); ++x) {
            if (mask >> x & 1) continue;
            std::uint64_t bigger = g.closure_mask(mask | (1ull << x));
            if (seen.insert(bigger).second) queue.push_back(bigger);
        }
    }
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask : seen) out.push_back(g.mask_elements(mask));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return out;
}

inline bool subgroup_is_normal(const Group& g, const std::vector<int>& h) {
    std::uint64_t mask = g.elements_mask(h);
    for (int x : h)
        for (int y = 0; y < g.order(); ++y)
            if (!(mask >> g.conj(x, y) & 1)) return false;
    return true;
}

// Backtracking isomorphism search; fine for orders up to ~16.
inline bool isomorphic(const Group& a, const Group& b) {
    if (a.order() != b.order()) return false;
    int n = a.order();
    std::vector<int> map(n, -1), used(n, 0);
    map[0] = 0;
    used[0] = 1;

    auto consistent = [&](int x) {
        for (int y = 0; y < n; ++y) {
            if (map[y] < 0) continue;
            int p = a.mul(x, y), q = a.mul(y, x);
            if (map[p] >= 0 && map[p] != b.mul(map[x], map[y])) return false;
            if (map[q] >= 0 && map[q] != b.mul(map[y], map[x])) return false;
        }
        return true;
    };

    std::vector<int> order_of(n);
    for (int i = 0; i < n; ++i) order_of[i] = i;

    // depth-first over elements in index order
    struct Frame {
        int elem, candidate;
    };
    std::vector<Frame> stack;
    int elem = 1;
    int candidate = 0;
    while (true) {
        if (elem == n) return true;
        bool advanced = false;
        for (; candidate < n; ++candidate) {
            if (used[candidate]) continue;
            if (a.element_order(elem) != b.element_order(candidate)) continue;
            map[elem] = candidate;
            used[candidate] = 1;
            if (consistent(elem)) {
                stack.push_back({elem, candidate});
                ++elem;
                candidate = 0;
                advanced = true;
                break;
            }
            used[candidate] = 0;
            map[elem] = -1;
        }
        if (advanced) continue;
        if (stack.empty()) return false;
        Frame f = stack.back();
        stack.pop_back();
        used[f.candidate] = 0;
        map[f.elem] = -1;
        elem = f.elem;
        candidate = f.candidate + 1;
    }
}

// Every normalized unit table over U(K) satisfying the cocycle identity,
// found by filtering all |U|^((n-1)^2) candidates. Keep |G| and |U| tiny.
inline std::vector<std::vector<int>> brute_force_cocycles(const Group& g,
                                                          const Ring& k) {
    int n = g.order();
    const auto& units = k.units();
    int free_count = (n - 1) * (n - 1);
    std::vector<std::vector<int>> found;
    std::vector<int> idx(free_count, 0);
    while (true) {
        std::vector<int> table(n * n, k.reduce(1));
        for (int p = 0; p < free_count; ++p) {
            int a = p / (n - 1) + 1, b = p % (n - 1) + 1;
            table[a * n + b] = units[idx[p]];
        }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n; ++c) {
                    int lhs = k.mul(table[a * n + b], table[g.mul(a, b) * n + c]);
                    int rhs = k.mul(table[b * n + c], table[a * n + g.mul(b, c)]);
                    if (lhs != rhs) {
                        ok = false;
                        break;
                    }
                }
        if (ok) found.push_back(table);

        int p = free_count - 1;
        while (p >= 0 && idx[p] + 1 == static_cast<int>(units.size())) {
            idx[p] = 0;
            --p;
        }
        if (p < 0) break;
        ++idx[p];
    }
    return found;
}

// S3 as an explicit table, built from permutation composition so it does not
// depend on any library constructor. Index 0 is the identity.
inline std::vector<int> s3_table() {
    using Perm = std::array<int, 3>;
    std::vector<Perm> elems = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                               {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose = [](const Perm& p, const Perm& q) {  // (p*q)(i) = p(q(i))
        return Perm{p[q[0]], p[q[1]], p[q[2]]};
    };
    auto index_of = [&](const Perm& p) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == p) return static_cast<int>(i);
        return -1;
    };
    std::vector<int> table(36);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            table[i * 6 + j] = index_of(compose(elems[i], elems[j]));
    return table;
}

}  // namespace oracle

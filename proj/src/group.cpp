#include "twistring/group.hpp"

#include <algorithm>
#include <numeric>

namespace twistring {

namespace {

constexpr int kMaxOrder = 64;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    return labels;
}

}  // namespace

void Group::finish(std::vector<std::string> labels) {
    if (n_ < 1)
        throw AlgebraError(errc::InvalidTable, "empty multiplication table");
    if (n_ > kMaxOrder)
        throw AlgebraError(errc::UnsupportedOrder,
                           "groups supported up to order 64, got " + std::to_string(n_));
    if (static_cast<int>(mul_.size()) != n_ * n_)
        throw AlgebraError(errc::InvalidTable, "table size is not order^2");
    for (int v : mul_)
        if (v < 0 || v >= n_)
            throw AlgebraError(errc::InvalidTable, "table entry out of range");

    for (int g = 0; g < n_; ++g)
        if (mul(0, g) != g || mul(g, 0) != g)
            throw AlgebraError(errc::InvalidTable,
                               "index 0 is not a two-sided identity", {g});

    inv_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        for (int h = 0; h < n_; ++h)
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inv_[g] = h;
                break;
            }
        if (inv_[g] < 0)
            throw AlgebraError(errc::InvalidTable, "no two-sided inverse", {g});
    }

    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw AlgebraError(errc::InvalidTable,
                                       "associativity fails", {a, b, c});

    element_order_.assign(n_, 0);
    for (int g = 0; g < n_; ++g) {
        int x = g, k = 1;
        while (x != 0) {
            x = mul(x, g);
            ++k;
        }
        element_order_[g] = k;
    }

    if (labels.empty()) labels = default_labels(n_);
    if (static_cast<int>(labels.size()) != n_)
        throw AlgebraError(errc::InvalidTable, "label count differs from order");
    labels_ = std::move(labels);
}

Group Group::from_table(int order, std::vector<int> mul,
                        std::vector<std::string> labels) {
    Group g;
    g.n_ = order;
    g.mul_ = std::move(mul);
    g.finish(std::move(labels));
    return g;
}

Group Group::cyclic(int n) {
    if (n < 1 || n > kMaxOrder)
        throw AlgebraError(errc::UnsupportedOrder, "cyclic order out of range");
    std::vector<int> mul(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i * n + j] = (i + j) % n;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : "c" + std::to_string(i);
    return from_table(n, std::move(mul), std::move(labels));
}

Group Group::elementary_abelian(int k) {
    if (k < 0 || k > 6)
        throw AlgebraError(errc::UnsupportedOrder, "elementary abelian rank out of range");
    int n = 1 << k;
    std::vector<int> mul(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[i * n + j] = i ^ j;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : "e" + std::to_string(i);
    return from_table(n, std::move(mul), std::move(labels));
}

// index = eps*4 + i encodes r^i s^eps with r^4 = s^2 = 1, s r s = r^-1
Group Group::dihedral8() {
    int n = 8;
    std::vector<int> mul(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int i = x & 3, e = x >> 2, j = y & 3, d = y >> 2;
            int rot = e == 0 ? (i + j) % 4 : (i - j + 4) % 4;
            mul[x * n + y] = ((e ^ d) << 2) | rot;
        }
    return from_table(n, std::move(mul),
                      {"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

// index = eps*4 + i encodes a^i b^eps with a^4 = 1, b^2 = a^2, b a b^-1 = a^-1
Group Group::quaternion8() {
    int n = 8;
    std::vector<int> mul(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int i = x & 3, e = x >> 2, j = y & 3, d = y >> 2;
            int rot, flip;
            if (e == 0) {
                rot = (i + j) % 4;
                flip = d;
            } else {
                rot = (i - j + 4) % 4;
                flip = 1 + d;
                if (flip == 2) {  // b^2 = a^2
                    flip = 0;
                    rot = (rot + 2) % 4;
                }
            }
            mul[x * n + y] = (flip << 2) | rot;
        }
    return from_table(n, std::move(mul),
                      {"1", "i", "-1", "-i", "j", "k", "-j", "-k"});
}

Group Group::direct_product(const Group& a, const Group& b) {
    int n = a.order() * b.order();
    if (n > kMaxOrder)
        throw AlgebraError(errc::UnsupportedOrder, "product order exceeds 64");
    std::vector<int> mul(n * n);
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    mul[idx(x1, y1) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    std::vector<std::string> labels(n);
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < b.order(); ++y)
            labels[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
    return from_table(n, std::move(mul), std::move(labels));
}

Group Group::semidirect_inversion(const Group& h) {
    if (!h.is_abelian())
        throw AlgebraError(errc::NotAbelian,
                           "semidirect_inversion requires an abelian base");
    int m = h.order(), n = 2 * m;
    if (n > kMaxOrder)
        throw AlgebraError(errc::UnsupportedOrder, "product order exceeds 64");
    std::vector<int> mul(n * n);
    // (h1, e)(h2, d) = (h1 * h2^(e ? -1 : 1), e xor d) since t h = h^-1 t
    for (int h1 = 0; h1 < m; ++h1)
        for (int e = 0; e < 2; ++e)
            for (int h2 = 0; h2 < m; ++h2)
                for (int d = 0; d < 2; ++d) {
                    int left = e * m + h1, right = d * m + h2;
                    int prod = e == 0 ? h.mul(h1, h2) : h.mul(h1, h.inv(h2));
                    mul[left * n + right] = (e ^ d) * m + prod;
                }
    std::vector<std::string> labels(n);
    for (int x = 0; x < m; ++x) {
        labels[x] = h.label(x);
        labels[m + x] = h.label(x) + "*t";
    }
    return from_table(n, std::move(mul), std::move(labels));
}

Group Group::central_product(const Group& a, const Group& b, int za, int zb) {
    auto is_central_involution = [](const Group& g, int z) {
        if (z < 0 || z >= g.order() || g.element_order(z) != 2) return false;
        for (int x = 0; x < g.order(); ++x)
            if (!g.commute(x, z)) return false;
        return true;
    };
    if (!is_central_involution(a, za))
        throw AlgebraError(errc::BadCentralIdentification,
                           "za is not a central involution", {za});
    if (!is_central_involution(b, zb))
        throw AlgebraError(errc::BadCentralIdentification,
                           "zb is not a central involution", {zb});

    int nb = b.order();
    int raw = a.order() * nb;
    auto flat = [&](int x, int y) { return x * nb + y; };
    // coset of (x, y) is {(x, y), (x za, y zb)}; canonical rep = smaller flat index
    std::vector<int> canon(raw);
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < nb; ++y) {
            int self = flat(x, y);
            int twin = flat(a.mul(x, za), b.mul(y, zb));
            canon[self] = std::min(self, twin);
        }
    std::vector<int> reps;
    for (int p = 0; p < raw; ++p)
        if (canon[p] == p) reps.push_back(p);
    int n = static_cast<int>(reps.size());
    if (n > kMaxOrder)
        throw AlgebraError(errc::UnsupportedOrder, "product order exceeds 64");
    std::vector<int> rep_index(raw, -1);
    for (int i = 0; i < n; ++i) rep_index[reps[i]] = i;

    std::vector<int> mul(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int x1 = reps[i] / nb, y1 = reps[i] % nb;
            int x2 = reps[j] / nb, y2 = reps[j] % nb;
            mul[i * n + j] = rep_index[canon[flat(a.mul(x1, x2), b.mul(y1, y2))]];
        }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = "[" + a.label(reps[i] / nb) + "," + b.label(reps[i] % nb) + "]";
    return from_table(n, std::move(mul), std::move(labels));
}

bool Group::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (!commute(a, b)) return false;
    return true;
}

int Group::exponent() const {
    long long e = 1;
    for (int g = 0; g < n_; ++g) e = std::lcm(e, (long long)element_order_[g]);
    return static_cast<int>(e);
}

std::vector<int> Group::center() const {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    return centralizer(all);
}

std::vector<int> Group::centralizer(const std::vector<int>& s) const {
    if (s.empty())
        throw AlgebraError(errc::ContextMismatch, "centralizer of an empty set");
    std::vector<int> result;
    for (int g = 0; g < n_; ++g) {
        bool ok = true;
        for (int x : s)
            if (mul(g, x) != mul(x, g)) {
                ok = false;
                break;
            }
        if (ok) result.push_back(g);
    }
    return result;
}

std::uint64_t Group::closure_mask(std::uint64_t seed) const {
    std::uint64_t mask = seed | 1ull;  // identity always present
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < n_; ++a) {
            if (!(mask >> a & 1)) continue;
            for (int b = 0; b < n_; ++b) {
                if (!(mask >> b & 1)) continue;
                int p = mul(a, b);
                if (!(mask >> p & 1)) {
                    mask |= 1ull << p;
                    grew = true;
                }
            }
        }
    }
    return mask;
}

std::vector<int> Group::closure(const std::vector<int>& gens) const {
    std::uint64_t seed = 1;
    for (int g : gens) seed |= 1ull << g;
    return mask_elements(closure_mask(seed));
}

std::vector<int> Group::mask_elements(std::uint64_t mask) const {
    std::vector<int> elems;
    for (int g = 0; g < n_; ++g)
        if (mask >> g & 1) elems.push_back(g);
    return elems;
}

std::uint64_t Group::elements_mask(const std::vector<int>& elems) const {
    std::uint64_t mask = 0;
    for (int g : elems) mask |= 1ull << g;
    return mask;
}

std::vector<int> Group::commutator_subgroup() const {
    std::uint64_t seed = 1;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) seed |= 1ull << commutator(a, b);
    return mask_elements(closure_mask(seed));
}

std::vector<int> Group::frattini_subgroup() const {
    if (!is_power_of_two(n_))
        throw AlgebraError(errc::FrattiniUnsupported,
                           "frattini_subgroup implemented for 2-groups only");
    // for a 2-group, Phi(G) = <squares> * commutator subgroup
    std::uint64_t seed = 1;
    for (int g = 0; g < n_; ++g) seed |= 1ull << mul(g, g);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) seed |= 1ull << commutator(a, b);
    return mask_elements(closure_mask(seed));
}

bool Group::all_subgroups_normal() const {
    // a subgroup is a join of cyclic subgroups and joins of normal subgroups
    // are normal, so checking the cyclic ones is enough
    for (int g = 0; g < n_; ++g) {
        std::uint64_t cyc = 0;
        int x = g;
        do {
            cyc |= 1ull << x;
            x = mul(x, g);
        } while (x != g);
        for (int h = 0; h < n_; ++h)
            if (!(cyc >> conj(g, h) & 1)) return false;
    }
    return true;
}

StructureProfile structure_profile(const Group& g) {
    StructureProfile p;
    p.is_abelian = g.is_abelian();
    p.exponent = g.exponent();
    p.center = g.center();
    p.commutator_subgroup = g.commutator_subgroup();
    if (is_power_of_two(g.order())) p.frattini_subgroup = g.frattini_subgroup();
    p.all_subgroups_normal = g.all_subgroups_normal();
    return p;
}

bool is_extraspecial_2group(const Group& g) {
    if (!is_power_of_two(g.order()) || g.order() < 8) return false;
    auto z = g.center();
    if (z.size() != 2) return false;
    if (g.commutator_subgroup() != z) return false;
    return g.frattini_subgroup() == z;
}

}  // namespace twistring

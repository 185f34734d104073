#pragma once

#include <string>
#include <vector>

#include "twistring/errors.hpp"

namespace twistring {

struct RingElem;

/// A finite commutative coefficient ring with identity: Z/nZ (2 <= n <= 64)
/// or a prime field GF(p) (p <= 61). Values are canonical residues in
/// [0, order). Unit inverses are precomputed at construction because the
/// normality sweep evaluates lambda^{-1} in its inner loops. Immutable after
/// construction, safe to share across threads.
class Ring {
public:
    enum class Kind { ZMod, PrimeField };

    static Ring zmod(int n);
    static Ring prime_field(int p);

    Kind kind() const { return kind_; }
    int order() const { return order_; }
    // additive order of 1; equals the modulus for both supported families
    int characteristic() const { return order_; }
    bool is_integral_domain() const { return is_domain_; }
    const std::vector<int>& units() const { return units_; }

    int reduce(long long a) const {
        int r = static_cast<int>(a % order_);
        return r < 0 ? r + order_ : r;
    }
    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
    int neg(int a) const { return reduce(-static_cast<long long>(a)); }
    bool is_unit(int a) const { return inverse_table_[reduce(a)] >= 0; }
    int inverse(int a) const;  // throws NotAUnit

    RingElem elem(long long v) const;
    RingElem zero() const;
    RingElem one() const;

    std::string describe() const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.kind_ == b.kind_ && a.order_ == b.order_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    Ring(Kind kind, int order);

    Kind kind_;
    int order_;
    bool is_domain_;
    std::vector<int> units_;
    std::vector<int> inverse_table_;  // -1 for non-units
};

/// One ring element: a canonical residue tagged with its ring. Elements of
/// structurally different rings never compare equal; mixing them in
/// arithmetic raises ContextMismatch.
struct RingElem {
    int value = 0;
    const Ring* ring = nullptr;

    bool is_zero() const { return value == 0; }
    bool is_unit() const { return ring->is_unit(value); }
    RingElem inverse() const { return {ring->inverse(value), ring}; }

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.ring != nullptr && b.ring != nullptr && *a.ring == *b.ring &&
               a.value == b.value;
    }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }
};

namespace detail {
inline void require_same_ring(const RingElem& a, const RingElem& b) {
    if (a.ring == nullptr || b.ring == nullptr || !(*a.ring == *b.ring))
        throw AlgebraError(errc::ContextMismatch,
                           "ring elements belong to different rings");
}
}  // namespace detail

inline RingElem operator+(const RingElem& a, const RingElem& b) {
    detail::require_same_ring(a, b);
    return {a.ring->add(a.value, b.value), a.ring};
}
inline RingElem operator-(const RingElem& a, const RingElem& b) {
    detail::require_same_ring(a, b);
    return {a.ring->sub(a.value, b.value), a.ring};
}
inline RingElem operator*(const RingElem& a, const RingElem& b) {
    detail::require_same_ring(a, b);
    return {a.ring->mul(a.value, b.value), a.ring};
}
inline RingElem operator-(const RingElem& a) {
    return {a.ring->neg(a.value), a.ring};
}

inline RingElem Ring::elem(long long v) const { return {reduce(v), this}; }
inline RingElem Ring::zero() const { return {0, this}; }
inline RingElem Ring::one() const { return {reduce(1), this}; }

struct RingProfile {
    std::vector<int> units;
    int characteristic = 0;
    bool is_integral_domain = false;
};

RingProfile ring_profile(const Ring& ring);

}  // namespace twistring

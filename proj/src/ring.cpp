#include "twistring/ring.hpp"

namespace twistring {

namespace {

constexpr int kMaxModulus = 64;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Ring Ring::zmod(int n) {
    if (n < 2)
        throw AlgebraError(errc::ModulusTooSmall, "Z/nZ requires n >= 2, got " + std::to_string(n));
    if (n > kMaxModulus)
        throw AlgebraError(errc::ModulusTooLarge,
                           "Z/nZ supported up to n = 64, got " + std::to_string(n));
    return Ring(Kind::ZMod, n);
}

Ring Ring::prime_field(int p) {
    if (p < 2)
        throw AlgebraError(errc::ModulusTooSmall, "GF(p) requires p >= 2, got " + std::to_string(p));
    if (p > kMaxModulus)
        throw AlgebraError(errc::ModulusTooLarge,
                           "GF(p) supported up to p = 61, got " + std::to_string(p));
    if (!is_prime(p))
        throw AlgebraError(errc::NonPrimeModulus, std::to_string(p) + " is not prime");
    return Ring(Kind::PrimeField, p);
}

Ring::Ring(Kind kind, int order) : kind_(kind), order_(order) {
    // integral domain <=> no nonzero zero divisors, checked by definition
    is_domain_ = true;
    for (int a = 1; a < order_ && is_domain_; ++a)
        for (int b = 1; b < order_; ++b)
            if (mul(a, b) == 0) {
                is_domain_ = false;
                break;
            }

    inverse_table_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == 1 && mul(b, a) == 1) {
                inverse_table_[a] = b;
                break;
            }
    for (int a = 0; a < order_; ++a)
        if (inverse_table_[a] >= 0) units_.push_back(a);
}

int Ring::inverse(int a) const {
    int r = reduce(a);
    int inv = inverse_table_[r];
    if (inv < 0)
        throw AlgebraError(errc::NotAUnit,
                           std::to_string(r) + " is not a unit in " + describe(), {r});
    return inv;
}

std::string Ring::describe() const {
    return kind_ == Kind::ZMod ? "Z/" + std::to_string(order_)
                               : "GF(" + std::to_string(order_) + ")";
}

RingProfile ring_profile(const Ring& ring) {
    return {ring.units(), ring.characteristic(), ring.is_integral_domain()};
}

}  // namespace twistring

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "twistring/cocycle.hpp"

namespace twistring {

/// f: G -> U(K) with f(1) = 1. Together with a factor system it defines the
/// candidate involution x -> x^f.
class FMap {
public:
    FMap(const Group& g, const Ring& k, std::vector<int> values);
    static FMap one(const Group& g, const Ring& k);
    // f = 1 on the index-2 subgroup h, -1 outside; a homomorphism, so it is
    // an involution candidate for any factor system with square-one entries.
    static FMap sign_character(const Group& g, const Ring& k,
                               const std::vector<int>& h);

    const Group& group() const { return *group_; }
    const Ring& ring() const { return *ring_; }
    RingElem at(int g) const { return {values_[g], ring_}; }
    const std::vector<int>& values() const { return values_; }

private:
    const Group* group_;
    const Ring* ring_;
    std::vector<int> values_;
};

/// A finitely supported coefficient vector sum_g alpha_g u_g over a shared
/// (group, ring, factor system) context. Zero coefficients are never stored.
class TwistedElement {
public:
    explicit TwistedElement(const FactorSystem& ctx) : ctx_(&ctx) {}

    const FactorSystem& context() const { return *ctx_; }
    const std::map<int, int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    RingElem coeff(int g) const;
    void set_coeff(int g, int value);  // reduces, drops zeros

    friend bool operator==(const TwistedElement& a, const TwistedElement& b);
    friend bool operator!=(const TwistedElement& a, const TwistedElement& b) {
        return !(a == b);
    }

private:
    const FactorSystem* ctx_;
    std::map<int, int> coeffs_;
};

TwistedElement zero_element(const FactorSystem& ctx);
TwistedElement basis_unit(const FactorSystem& ctx, int g);
TwistedElement add(const TwistedElement& x, const TwistedElement& y);
TwistedElement sub(const TwistedElement& x, const TwistedElement& y);
TwistedElement scale(const RingElem& alpha, const TwistedElement& x);
TwistedElement multiply(const TwistedElement& x, const TwistedElement& y);

/// u_g^{-1} = lambda_{g,g^{-1}}^{-1} u_{g^{-1}}.
TwistedElement unit_inverse(const FactorSystem& ctx, int g);

struct InvolutionVerdict {
    bool valid = false;
    int g = -1, h = -1;  // first failing pair in row-major order
};

/// x -> x^f is an involution iff f(gh) lambda_{g,h}^2 = f(g) f(h) for all g, h.
InvolutionVerdict involution_check(const FactorSystem& lambda, const FMap& f);

/// x^f = sum alpha_g f(g) u_g^{-1}.
TwistedElement apply_f(const TwistedElement& x, const FMap& f);

/// The coefficient-free pairwise defect
///   S_f(g,h) = f(h) lambda_{h,h^-1}^-1 (lambda_{g,h^-1} u_{gh^-1} - lambda_{h^-1,g} u_{h^-1 g})
///            + f(g) lambda_{g,g^-1}^-1 (lambda_{h,g^-1} u_{hg^-1} - lambda_{g^-1,h} u_{g^-1 h}).
TwistedElement pair_defect(const FactorSystem& lambda, const FMap& f, int g, int h);

struct NormalityVerdict {
    bool normal = false;
    int g = -1, h = -1;  // lexicographically first witness pair
};

/// Decides x x^f = x^f x for all x via the pairwise defects. For x supported
/// on {g,h}, x x^f - x^f x = alpha_g alpha_h S_f(g,h) and the diagonal terms
/// cancel through lambda_{g,g^-1} = lambda_{g^-1,g}, so S_f(x) is a sum of
/// pairwise defects and vanishing of every S_f(g,h) is equivalent to
/// normality over any commutative coefficient ring. Requires that x -> x^f
/// is an involution; raises NotAnInvolution otherwise.
NormalityVerdict is_f_normal(const FactorSystem& lambda, const FMap& f);

TwistedElement random_element(const FactorSystem& ctx, std::mt19937_64& rng);

struct SpotCheckResult {
    int samples = 0;
    std::uint64_t seed = 0;
    bool all_commute = true;
    std::vector<std::pair<int, int>> witness;  // coefficients of a failing x
};

/// Direct randomized check of x x^f = x^f x on `samples` random elements.
SpotCheckResult normality_spot_check(const FactorSystem& lambda, const FMap& f,
                                     int samples, std::uint64_t seed);

}  // namespace twistring

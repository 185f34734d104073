#include "twistring/twisted.hpp"

#include <algorithm>

namespace twistring {

namespace {

void require_shared(const TwistedElement& x, const TwistedElement& y) {
    if (&x.context() != &y.context())
        throw AlgebraError(errc::ContextMismatch,
                           "elements built over different contexts");
}

void require_fmap_context(const FactorSystem& lambda, const FMap& f) {
    if (&f.group() != &lambda.group() || !(f.ring() == lambda.ring()))
        throw AlgebraError(errc::ContextMismatch, "f context differs from lambda");
}

}  // namespace

FMap::FMap(const Group& g, const Ring& k, std::vector<int> values)
    : group_(&g), ring_(&k), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != g.order())
        throw AlgebraError(errc::InvalidFMap, "f size differs from group order");
    for (int& v : values_) v = k.reduce(v);
    if (values_[0] != k.reduce(1))
        throw AlgebraError(errc::InvalidFMap, "f(1) must be 1");
    for (int x = 0; x < g.order(); ++x)
        if (!k.is_unit(values_[x]))
            throw AlgebraError(errc::InvalidFMap, "f value is not a unit", {x});
}

FMap FMap::one(const Group& g, const Ring& k) {
    return FMap(g, k, std::vector<int>(g.order(), k.reduce(1)));
}

FMap FMap::sign_character(const Group& g, const Ring& k, const std::vector<int>& h) {
    if (2 * h.size() != static_cast<size_t>(g.order()))
        throw AlgebraError(errc::InvalidFMap, "sign character needs an index-2 subgroup");
    std::uint64_t mask = g.elements_mask(h);
    std::vector<int> values(g.order());
    for (int x = 0; x < g.order(); ++x)
        values[x] = (mask >> x & 1) ? k.reduce(1) : k.reduce(-1);
    return FMap(g, k, std::move(values));
}

RingElem TwistedElement::coeff(int g) const {
    auto it = coeffs_.find(g);
    return {it == coeffs_.end() ? 0 : it->second, &ctx_->ring()};
}

void TwistedElement::set_coeff(int g, int value) {
    int v = ctx_->ring().reduce(value);
    if (v == 0)
        coeffs_.erase(g);
    else
        coeffs_[g] = v;
}

bool operator==(const TwistedElement& a, const TwistedElement& b) {
    require_shared(a, b);
    return a.coeffs_ == b.coeffs_;
}

TwistedElement zero_element(const FactorSystem& ctx) { return TwistedElement(ctx); }

TwistedElement basis_unit(const FactorSystem& ctx, int g) {
    TwistedElement x(ctx);
    x.set_coeff(g, 1);
    return x;
}

TwistedElement add(const TwistedElement& x, const TwistedElement& y) {
    require_shared(x, y);
    const Ring& k = x.context().ring();
    TwistedElement r = x;
    for (const auto& [g, v] : y.coeffs())
        r.set_coeff(g, k.add(r.coeff(g).value, v));
    return r;
}

TwistedElement sub(const TwistedElement& x, const TwistedElement& y) {
    require_shared(x, y);
    const Ring& k = x.context().ring();
    TwistedElement r = x;
    for (const auto& [g, v] : y.coeffs())
        r.set_coeff(g, k.sub(r.coeff(g).value, v));
    return r;
}

TwistedElement scale(const RingElem& alpha, const TwistedElement& x) {
    const Ring& k = x.context().ring();
    if (!(k == *alpha.ring))
        throw AlgebraError(errc::ContextMismatch, "scalar from a different ring");
    TwistedElement r(x.context());
    for (const auto& [g, v] : x.coeffs()) r.set_coeff(g, k.mul(alpha.value, v));
    return r;
}

TwistedElement multiply(const TwistedElement& x, const TwistedElement& y) {
    require_shared(x, y);
    const FactorSystem& ctx = x.context();
    const Group& gr = ctx.group();
    const Ring& k = ctx.ring();
    TwistedElement r(ctx);
    for (const auto& [g, a] : x.coeffs())
        for (const auto& [h, b] : y.coeffs()) {
            int target = gr.mul(g, h);
            int term = k.mul(k.mul(a, b), ctx.value(g, h));
            r.set_coeff(target, k.add(r.coeff(target).value, term));
        }
    return r;
}

TwistedElement unit_inverse(const FactorSystem& ctx, int g) {
    const Group& gr = ctx.group();
    TwistedElement r(ctx);
    r.set_coeff(gr.inv(g), ctx.ring().inverse(ctx.value(g, gr.inv(g))));
    return r;
}

InvolutionVerdict involution_check(const FactorSystem& lambda, const FMap& f) {
    require_fmap_context(lambda, f);
    const Group& gr = lambda.group();
    const Ring& k = lambda.ring();
    for (int g = 0; g < gr.order(); ++g)
        for (int h = 0; h < gr.order(); ++h) {
            int lam = lambda.value(g, h);
            int lhs = k.mul(f.at(gr.mul(g, h)).value, k.mul(lam, lam));
            int rhs = k.mul(f.at(g).value, f.at(h).value);
            if (lhs != rhs) return {false, g, h};
        }
    return {true, -1, -1};
}

TwistedElement apply_f(const TwistedElement& x, const FMap& f) {
    const FactorSystem& ctx = x.context();
    require_fmap_context(ctx, f);
    const Group& gr = ctx.group();
    const Ring& k = ctx.ring();
    TwistedElement r(ctx);
    for (const auto& [g, a] : x.coeffs()) {
        int gi = gr.inv(g);
        int v = k.mul(a, f.at(g).value);
        v = k.mul(v, k.inverse(ctx.value(g, gi)));
        r.set_coeff(gi, k.add(r.coeff(gi).value, v));
    }
    return r;
}

TwistedElement pair_defect(const FactorSystem& lambda, const FMap& f, int g, int h) {
    require_fmap_context(lambda, f);
    const Group& gr = lambda.group();
    const Ring& k = lambda.ring();
    int gi = gr.inv(g), hi = gr.inv(h);
    TwistedElement r(lambda);
    auto accumulate = [&](int target, int value) {
        r.set_coeff(target, k.add(r.coeff(target).value, value));
    };
    int fh = k.mul(f.at(h).value, k.inverse(lambda.value(h, hi)));
    accumulate(gr.mul(g, hi), k.mul(fh, lambda.value(g, hi)));
    accumulate(gr.mul(hi, g), k.neg(k.mul(fh, lambda.value(hi, g))));
    int fg = k.mul(f.at(g).value, k.inverse(lambda.value(g, gi)));
    accumulate(gr.mul(h, gi), k.mul(fg, lambda.value(h, gi)));
    accumulate(gr.mul(gi, h), k.neg(k.mul(fg, lambda.value(gi, h))));
    return r;
}

NormalityVerdict is_f_normal(const FactorSystem& lambda, const FMap& f) {
    InvolutionVerdict inv = involution_check(lambda, f);
    if (!inv.valid)
        throw AlgebraError(errc::NotAnInvolution,
                           "x -> x^f is not an involution; f-normality is undefined",
                           {inv.g, inv.h});
    int n = lambda.group().order();
    for (int g = 0; g < n; ++g)
        for (int h = g + 1; h < n; ++h)
            if (!pair_defect(lambda, f, g, h).is_zero()) return {false, g, h};
    return {true, -1, -1};
}

TwistedElement random_element(const FactorSystem& ctx, std::mt19937_64& rng) {
    const Ring& k = ctx.ring();
    std::uniform_int_distribution<int> pick(0, k.order() - 1);
    TwistedElement x(ctx);
    for (int g = 0; g < ctx.group().order(); ++g) x.set_coeff(g, pick(rng));
    return x;
}

SpotCheckResult normality_spot_check(const FactorSystem& lambda, const FMap& f,
                                     int samples, std::uint64_t seed) {
    SpotCheckResult result;
    result.samples = samples;
    result.seed = seed;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        TwistedElement x = random_element(lambda, rng);
        TwistedElement xf = apply_f(x, f);
        if (!sub(multiply(x, xf), multiply(xf, x)).is_zero()) {
            result.all_commute = false;
            for (const auto& [g, v] : x.coeffs()) result.witness.push_back({g, v});
            break;
        }
    }
    return result;
}

}  // namespace twistring

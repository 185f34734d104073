#include "twistring/classify.hpp"

#include <algorithm>
#include <map>

namespace twistring {

namespace {

// Accumulates named constraint verdicts, keeping the first failure per name.
class ConstraintSet {
public:
    void check(const std::string& equation, bool ok, std::vector<int> at = {}) {
        auto it = index_.find(equation);
        if (it == index_.end()) {
            index_[equation] = items_.size();
            items_.push_back({equation, true, {}});
            it = index_.find(equation);
        }
        ConstraintDiagnostic& d = items_[it->second];
        if (!ok && d.passed) {
            d.passed = false;
            d.failure_at = std::move(at);
        }
    }

    bool all_passed() const {
        for (const auto& d : items_)
            if (!d.passed) return false;
        return true;
    }

    std::vector<ConstraintDiagnostic> take() { return std::move(items_); }

private:
    std::map<std::string, size_t> index_;
    std::vector<ConstraintDiagnostic> items_;
};

struct Context {
    const FactorSystem& lambda;
    const FMap& f;
    const Group& g;
    const Ring& k;

    int lam(int a, int b) const { return lambda.value(a, b); }
    int linv(int a, int b) const { return k.inverse(lambda.value(a, b)); }
    int fv(int a) const { return f.at(a).value; }

    // (lambda_{a,b} - lambda_{b,a}) (1 + f(b) lambda_{b,b}^{-1}) = 0
    bool skew_annihilated(int a, int b) const {
        int diff = k.sub(lam(a, b), lam(b, a));
        int factor = k.add(k.reduce(1), k.mul(fv(b), linv(b, b)));
        return k.mul(diff, factor) == 0;
    }
    // lambda_{a,h} = f(h) lambda_{h,h^-1}^-1 lambda_{h^-1,a} and
    // lambda_{h,a} = f(h) lambda_{h,h^-1}^-1 lambda_{a,h^-1},
    // for an involution a inverting h
    bool inversion_transfer(int a, int h) const {
        int hi = g.inv(h);
        int s = k.mul(fv(h), linv(h, hi));
        return lam(a, h) == k.mul(s, lam(hi, a)) && lam(h, a) == k.mul(s, lam(a, hi));
    }
    // lambda_{a,b} = f(a) lambda_{a,a^-1}^-1 lambda_{b,a^-1}
    //              = f(b) lambda_{b,b^-1}^-1 lambda_{b^-1,a}
    bool noncommuting_transfer(int a, int b) const {
        int ai = g.inv(a), bi = g.inv(b);
        return lam(a, b) == k.mul(k.mul(fv(a), linv(a, ai)), lam(b, ai)) &&
               lam(a, b) == k.mul(k.mul(fv(b), linv(b, bi)), lam(bi, a));
    }
    // lambda_{b,a} lambda_{ba,d} + f(d) lambda_{d,d^-1}^-1
    // lambda_{a,b} lambda_{ab,d^-1} = 0, for a central d of order 4
    bool central_d_cancellation(int a, int b, int d) const {
        int di = g.inv(d);
        int first = k.mul(lam(b, a), lam(g.mul(b, a), d));
        int second = k.mul(k.mul(fv(d), linv(d, di)),
                           k.mul(lam(a, b), lam(g.mul(a, b), di)));
        return k.add(first, second) == 0;
    }
    // evaluated additively so characteristic-2 rings behave correctly
    bool f_plus_lambda_diag_zero(int a) const {
        return k.add(fv(a), lam(a, a)) == 0;
    }
    bool f_equals_lambda_diag(int c) const { return fv(c) == lam(c, c); }
};

void check_case1(const Context& c, ConstraintSet& out) {
    int n = c.g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.check("symmetry", c.lam(a, b) == c.lam(b, a), {a, b});
}

void check_case2(const Context& c, ConstraintSet& out) {
    int n = c.g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.check("skew_annihilated", c.skew_annihilated(a, b), {a, b});
}

void check_case3(const Context& c, const SemidirectInversionWitness& w,
                 ConstraintSet& out) {
    for (int x : w.h)
        for (int y : w.h)
            out.check("symmetry_on_h", c.lam(x, y) == c.lam(y, x), {x, y});
    out.check("f(a)+lambda(a,a)=0", c.f_plus_lambda_diag_zero(w.a), {w.a});
    for (int x : w.h) out.check("inversion_transfer", c.inversion_transfer(w.a, x), {w.a, x});
}

// Shared by case 4 (on all of G) and case 5 (on Gamma).
void check_case4_on(const Context& c, const std::vector<int>& ambient,
                    ConstraintSet& out) {
    for (int a : ambient)
        for (int b : ambient) {
            if (c.g.commute(a, b)) {
                out.check("centralizer_symmetry", c.lam(a, b) == c.lam(b, a), {a, b});
            } else {
                out.check("noncommuting_transfer", c.noncommuting_transfer(a, b), {a, b});
            }
        }
    for (int x : ambient)
        if (c.g.element_order(x) == 2)
            out.check("f(c)=lambda(c,c)", c.f_equals_lambda_diag(x), {x});
}

void check_case5(const Context& c, const HamiltonianYc4Witness& w,
                 ConstraintSet& out) {
    check_case4_on(c, w.gamma, out);
    for (int a : w.gamma) {
        if (c.g.element_order(a) != 4) continue;
        for (int b : w.gamma) {
            if (c.g.element_order(b) != 4 || c.g.commute(a, b)) continue;
            out.check("central_d_cancellation", c.central_d_cancellation(a, b, w.d),
                       {a, b, w.d});
        }
    }
}

void check_case6(const Context& c, ConstraintSet& out) {
    int n = c.g.order();
    // order-4 elements must have symmetric entries against their centralizer
    for (int a = 0; a < n; ++a) {
        if (c.g.element_order(a) != 4) continue;
        for (int h = 0; h < n; ++h)
            if (c.g.commute(a, h))
                out.check("order4_centralizer_symmetry", c.lam(a, h) == c.lam(h, a),
                          {a, h});
    }
    // quaternion subgroups of order 8
    for (const auto& q : quaternion_subgroups8(c.g)) {
        std::vector<int> cent;
        for (int x = 0; x < n; ++x) {
            bool ok = true;
            for (int y : q)
                if (!c.g.commute(x, y)) {
                    ok = false;
                    break;
                }
            if (ok) cent.push_back(x);
        }
        for (int x : q)
            for (int y : q) {
                if (c.g.commute(x, y)) continue;
                out.check("quaternion_noncommuting_transfer",
                           c.noncommuting_transfer(x, y), {x, y});
                for (int d : cent)
                    if (c.g.element_order(d) == 4)
                        out.check("quaternion_central_d_cancellation",
                                  c.central_d_cancellation(x, y, d), {x, y, d});
            }
        for (int v : cent)
            if (c.g.element_order(v) == 2)
                out.check("quaternion_centralizer_involution_f",
                          c.f_equals_lambda_diag(v), {v});
    }
    // dihedral subgroups of order 8; the cyclic part of a D8 is its unique C4
    for (const auto& dsub : dihedral_subgroups8(c.g)) {
        int rot = -1;
        for (int x : dsub)
            if (c.g.element_order(x) == 4) {
                rot = x;
                break;
            }
        std::vector<int> cyc = c.g.closure({rot});
        std::uint64_t cyc_mask = c.g.elements_mask(cyc);
        std::vector<int> refl;
        for (int x : dsub)
            if (!(cyc_mask >> x & 1)) refl.push_back(x);

        for (int b : refl) {
            out.check("dihedral_reflection_f", c.f_plus_lambda_diag_zero(b), {b});
            for (int h : cyc)
                out.check("dihedral_inversion_transfer", c.inversion_transfer(b, h),
                          {b, h});
        }
        std::vector<int> cent;
        for (int x = 0; x < n; ++x) {
            bool ok = true;
            for (int y : dsub)
                if (!c.g.commute(x, y)) {
                    ok = false;
                    break;
                }
            if (ok) cent.push_back(x);
        }
        for (int d : cent) {
            if (c.g.element_order(d) != 4) continue;
            for (int x : dsub)
                for (int y : dsub) {
                    if (c.g.commute(x, y)) continue;
                    if (c.g.element_order(x) != 4 && c.g.element_order(y) != 4)
                        continue;
                    out.check("dihedral_central_d_cancellation",
                              c.central_d_cancellation(x, y, d), {x, y, d});
                }
        }
    }
}

}  // namespace

const char* sufficiency_name(Sufficiency s) {
    switch (s) {
        case Sufficiency::Guaranteed: return "guaranteed";
        case Sufficiency::GuaranteedIfDomainChar2: return "guaranteed_if_domain_char2";
        case Sufficiency::NotApplicable: return "not_applicable";
    }
    return "?";
}

std::vector<CaseDiagnostics> match_conditions(const FactorSystem& lambda,
                                              const FMap& f) {
    InvolutionVerdict inv = involution_check(lambda, f);
    if (!inv.valid)
        throw AlgebraError(errc::NotAnInvolution,
                           "x -> x^f is not an involution", {inv.g, inv.h});

    Context c{lambda, f, lambda.group(), lambda.ring()};
    ShapeReport shape = detect_case_shapes(c.g);
    std::vector<CaseDiagnostics> result;

    if (shape.abelian) {
        CaseDiagnostics d;
        d.tag = CaseTag::Abelian;
        d.witnesses_tried = 1;
        ConstraintSet set;
        check_case1(c, set);
        d.matched = set.all_passed();
        d.constraints = set.take();
        result.push_back(std::move(d));
    }
    if (shape.exp2_abelian) {
        CaseDiagnostics d;
        d.tag = CaseTag::ExpTwoAbelian;
        d.witnesses_tried = 1;
        ConstraintSet set;
        check_case2(c, set);
        d.matched = set.all_passed();
        d.constraints = set.take();
        result.push_back(std::move(d));
    }
    if (!shape.semidirect_inversion.empty()) {
        CaseDiagnostics d;
        d.tag = CaseTag::SemidirectInversion;
        for (const auto& w : shape.semidirect_inversion) {
            ++d.witnesses_tried;
            ConstraintSet set;
            check_case3(c, w, set);
            bool ok = set.all_passed();
            if (ok || d.witnesses_tried == 1) {
                d.witness = w;
                d.constraints = set.take();
            }
            if (ok) {
                d.matched = true;
                break;
            }
        }
        result.push_back(std::move(d));
    }
    if (!shape.hamiltonian2.empty()) {
        CaseDiagnostics d;
        d.tag = CaseTag::Hamiltonian2;
        d.witnesses_tried = 1;
        d.witness = shape.hamiltonian2.front();
        ConstraintSet set;
        std::vector<int> all(c.g.order());
        for (int i = 0; i < c.g.order(); ++i) all[i] = i;
        check_case4_on(c, all, set);
        d.matched = set.all_passed();
        d.constraints = set.take();
        result.push_back(std::move(d));
    }
    if (!shape.hamiltonian_yc4.empty()) {
        CaseDiagnostics d;
        d.tag = CaseTag::HamiltonianYC4;
        for (const auto& w : shape.hamiltonian_yc4) {
            ++d.witnesses_tried;
            ConstraintSet set;
            check_case5(c, w, set);
            bool ok = set.all_passed();
            if (ok || d.witnesses_tried == 1) {
                d.witness = w;
                d.constraints = set.take();
            }
            if (ok) {
                d.matched = true;
                break;
            }
        }
        result.push_back(std::move(d));
    }
    if (!shape.extraspecial_family.empty()) {
        CaseDiagnostics d;
        d.tag = CaseTag::ExtraspecialFamily;
        d.witnesses_tried = 1;
        d.witness = shape.extraspecial_family.front();
        ConstraintSet set;
        check_case6(c, set);
        d.matched = set.all_passed();
        d.constraints = set.take();
        result.push_back(std::move(d));
    }
    return result;
}

Sufficiency decide_sufficiency(const std::vector<int>& matched_cases, const Ring& k) {
    bool case6 = false;
    for (int m : matched_cases) {
        if (m >= 1 && m <= 5) return Sufficiency::Guaranteed;
        if (m == 6) case6 = true;
    }
    if (!case6) return Sufficiency::NotApplicable;
    bool domain_char2 = k.is_integral_domain() && k.characteristic() == 2;
    return domain_char2 ? Sufficiency::Guaranteed
                        : Sufficiency::GuaranteedIfDomainChar2;
}

ClassificationReport classify(const FactorSystem& lambda, const FMap& f,
                              bool run_oracle) {
    ClassificationReport report;
    report.cases = match_conditions(lambda, f);
    for (const auto& d : report.cases)
        if (d.matched) report.matched_cases.push_back(static_cast<int>(d.tag));
    report.sufficiency = decide_sufficiency(report.matched_cases, lambda.ring());

    if (run_oracle) {
        NormalityVerdict v = is_f_normal(lambda, f);
        report.oracle = OracleOutcome{v.normal, v.g, v.h};
        bool claims_normal = report.sufficiency == Sufficiency::Guaranteed;
        if (claims_normal && !v.normal) {
            report.agreement = Agreement::Discrepancy;
            report.discrepancy_detail =
                "matched sufficient conditions but the oracle found witness pair (" +
                std::to_string(v.g) + "," + std::to_string(v.h) + ")";
        } else if (v.normal && report.matched_cases.empty()) {
            report.agreement = Agreement::Discrepancy;
            report.discrepancy_detail =
                "oracle reports normal but no structural case matched";
        } else {
            report.agreement = Agreement::Consistent;
        }
    }
    return report;
}

SweepSummary cross_validate(const std::vector<NamedInstance>& instances) {
    SweepSummary summary;
    for (const auto& inst : instances) {
        ++summary.total;
        try {
            ClassificationReport report = classify(*inst.lambda, *inst.f, true);
            if (report.agreement == Agreement::Discrepancy)
                summary.discrepancies.push_back({inst.name, report.discrepancy_detail});
            summary.reports.push_back({inst.name, std::move(report)});
        } catch (const AlgebraError& e) {
            summary.skipped.push_back({inst.name, e.code()});
        }
    }
    return summary;
}

}  // namespace twistring

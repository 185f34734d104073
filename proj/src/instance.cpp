#include "twistring/instance.hpp"

#include <fstream>
#include <set>

namespace twistring {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw AlgebraError(errc::MalformedInstance, what);
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        malformed(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<int> require_int_array(const json& j, const std::string& what) {
    if (!j.is_array()) malformed(what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) malformed(what + " must be an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Ring make_ring(const json& desc) {
    if (!desc.is_object()) malformed("ring descriptor must be an object");
    std::string kind = desc.value("kind", "");
    int modulus = require_int(desc, "modulus");
    if (kind == "zmod") return Ring::zmod(modulus);
    if (kind == "gfp") return Ring::prime_field(modulus);
    malformed("unknown ring kind \"" + kind + "\"");
}

Group build_group(const json& desc) {
    if (!desc.is_object()) malformed("group descriptor must be an object");
    std::string family = desc.value("family", "");
    if (family == "cyclic") return Group::cyclic(require_int(desc, "n"));
    if (family == "elem_abelian") return Group::elementary_abelian(require_int(desc, "k"));
    if (family == "dihedral8") return Group::dihedral8();
    if (family == "quaternion8") return Group::quaternion8();
    if (family == "product") {
        if (!desc.contains("a") || !desc.contains("b")) malformed("product needs a and b");
        return Group::direct_product(build_group(desc["a"]), build_group(desc["b"]));
    }
    if (family == "semidirect_inv") {
        if (!desc.contains("h")) malformed("semidirect_inv needs h");
        return Group::semidirect_inversion(build_group(desc["h"]));
    }
    if (family == "central_product") {
        if (!desc.contains("a") || !desc.contains("b"))
            malformed("central_product needs a and b");
        return Group::central_product(build_group(desc["a"]), build_group(desc["b"]),
                                      require_int(desc, "za"), require_int(desc, "zb"));
    }
    if (family == "table") {
        int order = require_int(desc, "order");
        auto mul = require_int_array(desc.value("mul", json::array()), "mul");
        if (static_cast<int>(mul.size()) != order * order)
            malformed("mul must hold order^2 entries");
        std::vector<std::string> labels;
        if (desc.contains("labels")) {
            for (const auto& l : desc["labels"]) labels.push_back(l.get<std::string>());
        }
        return Group::from_table(order, std::move(mul), std::move(labels));
    }
    malformed("unknown group family \"" + family + "\"");
}

namespace {

FactorSystem parse_cocycle(const json& desc, const Group& g, const Ring& k) {
    if (desc.is_string()) {
        std::string name = desc.get<std::string>();
        if (name == "trivial") return FactorSystem::trivial(g, k);
        if (name == "quaternion_c2c2") return FactorSystem::quaternion_c2c2(g, k);
        malformed("unknown cocycle family \"" + name + "\"");
    }
    if (!desc.is_object()) malformed("cocycle must be a name or an object");
    if (desc.contains("entries")) {
        auto entries = require_int_array(desc["entries"], "cocycle entries");
        if (static_cast<int>(entries.size()) != g.order() * g.order())
            malformed("cocycle entries must hold order^2 residues");
        return FactorSystem::validate(entries, g, k);
    }
    if (desc.value("kind", "") == "coboundary") {
        auto theta = require_int_array(desc.value("theta", json::array()), "theta");
        return coboundary(DiagonalMap(g, k, std::move(theta)));
    }
    malformed("cocycle object needs \"entries\" or kind \"coboundary\"");
}

FMap parse_fmap(const json& desc, const Group& g, const Ring& k) {
    if (desc.is_string()) {
        if (desc.get<std::string>() == "one") return FMap::one(g, k);
        malformed("unknown f family \"" + desc.get<std::string>() + "\"");
    }
    if (desc.is_array()) return FMap(g, k, require_int_array(desc, "f"));
    malformed("f must be \"one\" or an array of residues");
}

}  // namespace

Instance parse_instance(const json& file) {
    if (!file.is_object()) malformed("instance file must be a JSON object");
    if (!file.contains("ring") || !file.contains("group"))
        malformed("instance file needs \"ring\" and \"group\"");
    Instance inst;
    inst.ring_desc = file["ring"];
    inst.group_desc = file["group"];
    inst.ring = std::make_unique<Ring>(make_ring(inst.ring_desc));
    inst.group = std::make_unique<Group>(build_group(inst.group_desc));
    if (file.contains("cocycle"))
        inst.cocycle = parse_cocycle(file["cocycle"], *inst.group, *inst.ring);
    if (file.contains("f")) {
        if (!inst.cocycle) malformed("f requires a cocycle context");
        inst.f = parse_fmap(file["f"], *inst.group, *inst.ring);
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        malformed("invalid JSON in " + path + ": " + e.what());
    }
    return parse_instance(j);
}

json serialize_instance(const Instance& inst) {
    json out;
    out["ring"] = inst.ring_desc;
    out["group"] = inst.group_desc;
    if (inst.cocycle) out["cocycle"] = {{"entries", inst.cocycle->entries()}};
    if (inst.f) out["f"] = inst.f->values();
    return out;
}

bool same_instance(const Instance& a, const Instance& b) {
    if (!(*a.ring == *b.ring)) return false;
    if (a.group->order() != b.group->order()) return false;
    for (int x = 0; x < a.group->order(); ++x)
        for (int y = 0; y < a.group->order(); ++y)
            if (a.group->mul(x, y) != b.group->mul(x, y)) return false;
    if (a.cocycle.has_value() != b.cocycle.has_value()) return false;
    if (a.cocycle && a.cocycle->entries() != b.cocycle->entries()) return false;
    if (a.f.has_value() != b.f.has_value()) return false;
    if (a.f && a.f->values() != b.f->values()) return false;
    return true;
}

TwistedElement parse_element(const json& j, const FactorSystem& ctx) {
    if (!j.is_object() || !j.contains("elem")) malformed("element literal needs \"elem\"");
    TwistedElement x(ctx);
    for (const auto& pair : j["elem"]) {
        if (!pair.is_array() || pair.size() != 2) malformed("elem entries are [index, residue]");
        int g = pair[0].get<int>();
        if (g < 0 || g >= ctx.group().order()) malformed("element index out of range");
        x.set_coeff(g, ctx.ring().add(x.coeff(g).value, pair[1].get<int>()));
    }
    return x;
}

json serialize_element(const TwistedElement& x) {
    json entries = json::array();
    for (const auto& [g, v] : x.coeffs()) entries.push_back({g, v});
    return json{{"elem", entries}};
}

namespace {

json witness_to_json(const CaseWitness& w) {
    struct Visitor {
        json operator()(const std::monostate&) const { return nullptr; }
        json operator()(const SemidirectInversionWitness& v) const {
            return {{"h", v.h}, {"a", v.a}};
        }
        json operator()(const HamiltonianSplit& v) const {
            return {{"gen_a", v.gen_a}, {"gen_b", v.gen_b}, {"q8", v.q8}, {"w", v.w}};
        }
        json operator()(const HamiltonianYc4Witness& v) const {
            return {{"gamma", v.gamma},
                    {"d", v.d},
                    {"split", Visitor{}(v.gamma_split)}};
        }
        json operator()(const ExtraspecialWitness& v) const {
            json c = v.c ? json(*v.c) : json(nullptr);
            return {{"e", v.e}, {"c", c}, {"w", v.w}};
        }
    };
    return std::visit(Visitor{}, w);
}

json constraints_to_json(const std::vector<ConstraintDiagnostic>& cs) {
    json out = json::array();
    for (const auto& c : cs) {
        json item;
        item["equation"] = c.equation;
        item["passed"] = c.passed;
        item["failure_at"] = c.passed ? json(nullptr) : json(c.failure_at);
        out.push_back(std::move(item));
    }
    return out;
}

json case_to_json(const CaseDiagnostics& d) {
    json item;
    item["case"] = static_cast<int>(d.tag);
    item["tag"] = case_tag_name(d.tag);
    item["matched"] = d.matched;
    item["witnesses_tried"] = d.witnesses_tried;
    item["witness"] = witness_to_json(d.witness);
    item["constraints"] = constraints_to_json(d.constraints);
    return item;
}

}  // namespace

json report_to_json(const ClassificationReport& report) {
    json out;
    json cases = json::array();
    for (const auto& d : report.cases) cases.push_back(case_to_json(d));
    out["cases"] = std::move(cases);

    json matched = json::array();
    for (const auto& d : report.cases)
        if (d.matched)
            matched.push_back({{"case", static_cast<int>(d.tag)},
                               {"tag", case_tag_name(d.tag)},
                               {"witness", witness_to_json(d.witness)}});
    out["matched"] = std::move(matched);
    out["sufficiency"] = sufficiency_name(report.sufficiency);

    if (report.oracle) {
        json oracle;
        oracle["normal"] = report.oracle->normal;
        oracle["witness"] = report.oracle->normal
                                ? json(nullptr)
                                : json::array({report.oracle->g, report.oracle->h});
        out["oracle"] = std::move(oracle);
    } else {
        out["oracle"] = nullptr;
    }
    if (report.agreement) {
        out["agreement"] =
            *report.agreement == Agreement::Consistent ? "consistent" : "discrepancy";
        if (*report.agreement == Agreement::Discrepancy)
            out["discrepancy_detail"] = report.discrepancy_detail;
    } else {
        out["agreement"] = nullptr;
    }
    return out;
}

json sweep_to_json(const SweepSummary& summary) {
    json out;
    out["instances"] = summary.total;
    json skipped = json::array();
    for (const auto& [name, reason] : summary.skipped)
        skipped.push_back({{"name", name}, {"reason", reason}});
    out["skipped"] = std::move(skipped);
    json discrepancies = json::array();
    for (const auto& [name, detail] : summary.discrepancies)
        discrepancies.push_back({{"name", name}, {"detail", detail}});
    out["discrepancies"] = std::move(discrepancies);
    json results = json::array();
    for (const auto& [name, report] : summary.reports) {
        json item;
        item["name"] = name;
        json matched = json::array();
        for (int m : report.matched_cases) matched.push_back(m);
        item["matched"] = std::move(matched);
        item["normal"] = report.oracle ? json(report.oracle->normal) : json(nullptr);
        item["agreement"] = report.agreement
                                ? json(*report.agreement == Agreement::Consistent
                                           ? "consistent"
                                           : "discrepancy")
                                : json(nullptr);
        results.push_back(std::move(item));
    }
    out["results"] = std::move(results);
    return out;
}

json error_to_json(const AlgebraError& err) {
    json out;
    out["error"] = {{"code", err.code()},
                    {"locus", err.locus()},
                    {"message", err.what()}};
    return out;
}

int exit_code_for(const AlgebraError& err) {
    const std::string& c = err.code();
    // semantic negatives on well-formed input
    if (c == errc::NonUnitEntry || c == errc::NotNormalized ||
        c == errc::CocycleViolation || c == errc::NotAnInvolution ||
        c == errc::BudgetExceeded)
        return 1;
    return 2;
}

}  // namespace twistring

// Command-line front end: validate / involution / check / classify /
// enumerate / sweep over JSON instance files. Reports go to stdout as JSON,
// a one-line human summary to stderr. Exit codes: 0 success or consistent,
// 1 negative verdict on well-formed input, 2 malformed input.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistring/instance.hpp"

using namespace twistring;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240817;

std::uint64_t sampling_seed() {
    if (const char* env = std::getenv("TWISTRING_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw AlgebraError(errc::MalformedInstance,
                               "TWISTRING_SEED must be an unsigned integer");
        }
    }
    return kDefaultSeed;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int fail_with(const AlgebraError& e) {
    emit(error_to_json(e));
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
}

Instance load_checked(const std::string& path) { return load_instance(path); }

int cmd_validate(const std::string& path) {
    Instance inst;
    try {
        inst = load_checked(path);
        if (!inst.cocycle)
            throw AlgebraError(errc::MalformedInstance, "file carries no cocycle");
    } catch (const AlgebraError& e) {
        if (e.code() == errc::NonUnitEntry || e.code() == errc::NotNormalized ||
            e.code() == errc::CocycleViolation) {
            json out = error_to_json(e);
            out["ok"] = false;
            emit(out);
            std::cerr << "invalid cocycle: " << e.what() << "\n";
            return 1;
        }
        return fail_with(e);
    }
    json out;
    out["ok"] = true;
    out["group_order"] = inst.group->order();
    out["ring"] = inst.ring_desc;
    emit(out);
    std::cerr << "valid cocycle on a group of order " << inst.group->order() << "\n";
    return 0;
}

int cmd_involution(const std::string& path) {
    try {
        Instance inst = load_checked(path);
        if (!inst.cocycle || !inst.f)
            throw AlgebraError(errc::MalformedInstance, "file needs cocycle and f");
        InvolutionVerdict v = involution_check(*inst.cocycle, *inst.f);
        json out;
        out["valid"] = v.valid;
        out["first_violation"] = v.valid ? json(nullptr) : json::array({v.g, v.h});
        emit(out);
        std::cerr << (v.valid ? "x -> x^f is an involution\n"
                              : "not an involution\n");
        return v.valid ? 0 : 1;
    } catch (const AlgebraError& e) {
        return fail_with(e);
    }
}

int cmd_check(const std::string& path, int samples) {
    try {
        Instance inst = load_checked(path);
        if (!inst.cocycle || !inst.f)
            throw AlgebraError(errc::MalformedInstance, "file needs cocycle and f");
        NormalityVerdict v = is_f_normal(*inst.cocycle, *inst.f);
        SpotCheckResult spot =
            normality_spot_check(*inst.cocycle, *inst.f, samples, sampling_seed());
        bool agrees = spot.all_commute == v.normal;
        json out;
        out["normal"] = v.normal;
        out["witness"] = v.normal ? json(nullptr) : json::array({v.g, v.h});
        out["spot_check"] = {{"samples", spot.samples},
                             {"seed", spot.seed},
                             {"agrees", agrees}};
        emit(out);
        std::cerr << (v.normal ? "normal" : "not normal") << "; spot check ("
                  << samples << " samples, seed " << spot.seed << ") "
                  << (agrees ? "agrees" : "DISAGREES") << "\n";
        return v.normal && agrees ? 0 : 1;
    } catch (const AlgebraError& e) {
        return fail_with(e);
    }
}

int cmd_classify(const std::string& path, bool no_oracle) {
    try {
        Instance inst = load_checked(path);
        if (!inst.cocycle || !inst.f)
            throw AlgebraError(errc::MalformedInstance, "file needs cocycle and f");
        ClassificationReport report = classify(*inst.cocycle, *inst.f, !no_oracle);
        emit(report_to_json(report));
        std::cerr << "matched cases:";
        for (int m : report.matched_cases) std::cerr << " " << m;
        if (report.matched_cases.empty()) std::cerr << " none";
        std::cerr << "; sufficiency " << sufficiency_name(report.sufficiency);
        if (report.oracle)
            std::cerr << "; oracle " << (report.oracle->normal ? "normal" : "not normal");
        std::cerr << "\n";
        if (no_oracle) return report.matched_cases.empty() ? 1 : 0;
        bool negative = !report.oracle->normal ||
                        *report.agreement == Agreement::Discrepancy;
        return negative ? 1 : 0;
    } catch (const AlgebraError& e) {
        return fail_with(e);
    }
}

int cmd_enumerate(const json& group_desc, const json& ring_desc, std::size_t limit) {
    try {
        auto ring = std::make_unique<Ring>(make_ring(ring_desc));
        auto group = std::make_unique<Group>(build_group(group_desc));
        json out;
        json list = json::array();
        if (group->order() <= 4) {
            auto all = enumerate_cocycles(*group, *ring, limit);
            for (const auto& fs : all) list.push_back(fs.entries());
            out["mode"] = "exhaustive";
        } else {
            std::uint64_t seed = sampling_seed();
            auto sampled = sample_cocycles(*group, *ring, limit, seed);
            for (const auto& fs : sampled) list.push_back(fs.entries());
            out["mode"] = "sample";
            out["seed"] = seed;
        }
        out["count"] = list.size();
        out["cocycles"] = std::move(list);
        emit(out);
        std::cerr << out["mode"].get<std::string>() << " enumeration: "
                  << out["count"].get<std::size_t>() << " cocycles\n";
        return 0;
    } catch (const AlgebraError& e) {
        return fail_with(e);
    }
}

int cmd_sweep(const std::string& path) {
    namespace fs = std::filesystem;
    try {
        std::vector<std::string> files;
        if (fs::is_directory(path)) {
            for (const auto& entry : fs::directory_iterator(path))
                if (entry.path().extension() == ".json")
                    files.push_back(entry.path().string());
            std::sort(files.begin(), files.end());
        } else if (fs::exists(path)) {
            files.push_back(path);
        } else {
            throw AlgebraError(errc::MalformedInstance, "no such file or directory: " + path);
        }
        if (files.empty())
            throw AlgebraError(errc::MalformedInstance, "no .json instances under " + path);

        // keep instances alive for the duration of the sweep
        std::vector<Instance> instances;
        std::vector<std::string> names;
        SweepSummary summary;
        std::vector<NamedInstance> runnable;
        for (const auto& file : files) {
            std::string name = fs::path(file).filename().string();
            try {
                Instance inst = load_checked(file);
                if (!inst.cocycle || !inst.f)
                    throw AlgebraError(errc::MalformedInstance,
                                       "file needs cocycle and f");
                instances.push_back(std::move(inst));
                names.push_back(name);
            } catch (const AlgebraError& e) {
                summary.skipped.push_back({name, e.code()});
                ++summary.total;
            }
        }
        for (size_t i = 0; i < instances.size(); ++i)
            runnable.push_back({names[i], &*instances[i].cocycle, &*instances[i].f});
        SweepSummary run = cross_validate(runnable);
        run.total += summary.total;
        for (auto& s : summary.skipped) run.skipped.push_back(std::move(s));

        emit(sweep_to_json(run));
        std::cerr << "swept " << run.total << " instances, "
                  << run.discrepancies.size() << " discrepancies, "
                  << run.skipped.size() << " skipped\n";
        return run.discrepancies.empty() ? 0 : 1;
    } catch (const AlgebraError& e) {
        return fail_with(e);
    }
}

json parse_desc_arg(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw AlgebraError(errc::MalformedInstance,
                           std::string("invalid JSON for ") + what + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted group ring explorer"};
    app.require_subcommand(1);

    std::string file;
    auto* validate = app.add_subcommand("validate", "audit the cocycle of an instance file");
    validate->add_option("file", file)->required();

    auto* involution = app.add_subcommand("involution", "check that x -> x^f is an involution");
    involution->add_option("file", file)->required();

    int samples = 200;
    auto* check = app.add_subcommand("check", "decide f-normality with the pairwise sweep");
    check->add_option("file", file)->required();
    check->add_option("--oracle-samples", samples, "random spot checks (default 200)");

    bool no_oracle = false;
    auto* classify_cmd = app.add_subcommand("classify", "match the structural cases");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_flag("--no-oracle", no_oracle, "skip the pairwise oracle");

    std::string group_desc, ring_desc;
    std::size_t limit = 1000;
    auto* enumerate = app.add_subcommand("enumerate", "list factor systems of a small group");
    enumerate->add_option("--group", group_desc, "group descriptor JSON")->required();
    enumerate->add_option("--ring", ring_desc, "ring descriptor JSON")->required();
    enumerate->add_option("--limit", limit, "budget / sample count (default 1000)");

    auto* sweep = app.add_subcommand("sweep", "cross-validate a file or directory of instances");
    sweep->add_option("path", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (involution->parsed()) return cmd_involution(file);
        if (check->parsed()) return cmd_check(file, samples);
        if (classify_cmd->parsed()) return cmd_classify(file, no_oracle);
        if (enumerate->parsed())
            return cmd_enumerate(parse_desc_arg(group_desc, "--group"),
                                 parse_desc_arg(ring_desc, "--ring"), limit);
        if (sweep->parsed()) return cmd_sweep(file);
    } catch (const AlgebraError& e) {
        return fail_with(e);
    }
    return 2;
}

#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "twistring/classify.hpp"

namespace twistring {

/// One fully resolved instance file: ring, group, cocycle and f map. The
/// ring and group live behind stable pointers so the cocycle and f can
/// reference them across moves.
struct Instance {
    nlohmann::json ring_desc;
    nlohmann::json group_desc;
    std::unique_ptr<Ring> ring;
    std::unique_ptr<Group> group;
    std::optional<FactorSystem> cocycle;
    std::optional<FMap> f;
};

Ring make_ring(const nlohmann::json& desc);
Group build_group(const nlohmann::json& desc);

/// Parses {"ring":…, "group":…, "cocycle":…, "f":…}; cocycle and f are
/// optional at this layer (validate needs no f). Shape problems raise
/// MalformedInstance; semantic failures keep their own codes.
Instance parse_instance(const nlohmann::json& file);
Instance load_instance(const std::string& path);
nlohmann::json serialize_instance(const Instance& inst);

bool same_instance(const Instance& a, const Instance& b);

/// {"elem": [[index, residue], ...]} literals.
TwistedElement parse_element(const nlohmann::json& j, const FactorSystem& ctx);
nlohmann::json serialize_element(const TwistedElement& x);

nlohmann::json report_to_json(const ClassificationReport& report);
nlohmann::json sweep_to_json(const SweepSummary& summary);
nlohmann::json error_to_json(const AlgebraError& err);

// maps an error code to the CLI exit code: 1 for negative verdicts on
// well-formed input, 2 for malformed input
int exit_code_for(const AlgebraError& err);

}  // namespace twistring

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistring/shapes.hpp"
#include "twistring/twisted.hpp"

namespace twistring {

enum class Sufficiency { Guaranteed, GuaranteedIfDomainChar2, NotApplicable };

const char* sufficiency_name(Sufficiency s);

struct ConstraintDiagnostic {
    std::string equation;
    bool passed = true;
    std::vector<int> failure_at;  // first failing instantiation, element indices
};

using CaseWitness =
    std::variant<std::monostate, SemidirectInversionWitness, HamiltonianSplit,
                 HamiltonianYc4Witness, ExtraspecialWitness>;

struct CaseDiagnostics {
    CaseTag tag{};
    bool matched = false;
    int witnesses_tried = 0;
    CaseWitness witness;  // the passing witness, or the first one tried
    std::vector<ConstraintDiagnostic> constraints;
};

/// Evaluates the constraint equations of every detected case shape.
/// Precondition: x -> x^f is an involution (NotAnInvolution otherwise).
std::vector<CaseDiagnostics> match_conditions(const FactorSystem& lambda,
                                              const FMap& f);

struct OracleOutcome {
    bool normal = false;
    int g = -1, h = -1;
};

enum class Agreement { Consistent, Discrepancy };

struct ClassificationReport {
    std::vector<CaseDiagnostics> cases;  // every detected shape, case order
    std::vector<int> matched_cases;      // case numbers with all constraints met
    Sufficiency sufficiency = Sufficiency::NotApplicable;
    std::optional<OracleOutcome> oracle;
    std::optional<Agreement> agreement;
    std::string discrepancy_detail;
};

Sufficiency decide_sufficiency(const std::vector<int>& matched_cases, const Ring& k);

ClassificationReport classify(const FactorSystem& lambda, const FMap& f,
                              bool run_oracle = true);

struct NamedInstance {
    std::string name;
    const FactorSystem* lambda = nullptr;
    const FMap* f = nullptr;
};

struct SweepSummary {
    int total = 0;
    std::vector<std::pair<std::string, std::string>> skipped;        // name, reason
    std::vector<std::pair<std::string, std::string>> discrepancies;  // name, detail
    std::vector<std::pair<std::string, ClassificationReport>> reports;
};

/// Classifies every instance with the oracle enabled and collects the
/// Discrepancy reports; per-instance errors become skipped entries.
SweepSummary cross_validate(const std::vector<NamedInstance>& instances);

}  // namespace twistring

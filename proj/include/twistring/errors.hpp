#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twistring {

// Single exception type carrying a machine-readable code plus the element
// indices the failure points at (empty when not applicable). The CLI maps
// codes to its "error" report field; tests match on codes.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(std::string code, const std::string& message,
                 std::vector<int> locus = {})
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          locus_(std::move(locus)) {}

    const std::string& code() const { return code_; }
    const std::vector<int>& locus() const { return locus_; }

private:
    std::string code_;
    std::vector<int> locus_;
};

namespace errc {
// coefficient_ring
inline constexpr const char* NonPrimeModulus = "NonPrimeModulus";
inline constexpr const char* ModulusTooSmall = "ModulusTooSmall";
inline constexpr const char* ModulusTooLarge = "ModulusTooLarge";
inline constexpr const char* NotAUnit = "NotAUnit";
// finite_group
inline constexpr const char* InvalidTable = "InvalidTable";
inline constexpr const char* BadCentralIdentification = "BadCentralIdentification";
inline constexpr const char* NotAbelian = "NotAbelian";
inline constexpr const char* FrattiniUnsupported = "FrattiniUnsupported";
inline constexpr const char* UnsupportedOrder = "UnsupportedOrder";
// factor_system
inline constexpr const char* NonUnitEntry = "NonUnitEntry";
inline constexpr const char* NotNormalized = "NotNormalized";
inline constexpr const char* CocycleViolation = "CocycleViolation";
inline constexpr const char* TooLargeForExhaustive = "TooLargeForExhaustive";
inline constexpr const char* BudgetExceeded = "BudgetExceeded";
// twisted_ring / classifier
inline constexpr const char* ContextMismatch = "ContextMismatch";
inline constexpr const char* NotAnInvolution = "NotAnInvolution";
inline constexpr const char* InvalidFMap = "InvalidFMap";
inline constexpr const char* InvalidDiagonalMap = "InvalidDiagonalMap";
// instance files
inline constexpr const char* MalformedInstance = "MalformedInstance";
}  // namespace errc

}  // namespace twistring

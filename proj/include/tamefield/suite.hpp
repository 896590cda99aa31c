#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamefield {

enum class CaseStatus { PASS, FAIL, INCONCLUSIVE };

std::string to_string(CaseStatus s);

struct SuiteCase {
    std::string id;
    std::string description;
    std::string paper_anchor;  // the named result the case exercises
    std::vector<std::string> tags;
    CaseStatus status = CaseStatus::INCONCLUSIVE;
    std::string details;
    double seconds = 0;
};

struct SuiteResult {
    std::vector<SuiteCase> cases;  // ordered by id

    bool passed() const;  // no FAIL
};

inline constexpr std::uint64_t kSuiteSeed = 0x7a3ef1e1d;

/// Case ids in run order.
std::vector<std::string> suite_case_ids();

/// Runs every case whose id, or one of whose tags, equals `filter` (all when empty).
/// Cases run concurrently; each is deterministic for a given seed.
SuiteResult run_suite(const std::optional<std::string>& filter = std::nullopt, std::uint64_t seed = kSuiteSeed,
                      bool parallel = true);

}  // namespace tamefield

#pragma once

#include "tamefield/dsl.hpp"
#include "tamefield/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace tamefield {

/// Inconsistent or missing command options (exit code 2 at the command line).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CommandOptions {
    long prec = kDefaultHahnPrec;
    std::uint64_t seed = kSuiteSeed;
};

/// A report envelope plus its plain-text rendering.
struct CommandResult {
    Json report;
    std::string text;
    int exit_code = 0;
};

/// Exactly one of `poly` and `as` is set.
CommandResult cmd_analyze_extension(const CommandOptions& o, const std::string& field, const std::optional<std::string>& poly,
                                    const std::optional<std::string>& as);
CommandResult cmd_classify_field(const CommandOptions& o, const std::string& field);
CommandResult cmd_gauss_value(const CommandOptions& o, const std::string& field, const std::string& mpoly, int nx = -1,
                              int ny = -1);
/// `target` is an exponent of t ("40", "-1/2", "(1, 0)"); defaults to the field precision.
CommandResult cmd_hensel_lift(const CommandOptions& o, const std::string& field, const std::string& poly,
                              const std::string& y0 = "1", const std::optional<std::string>& target = std::nullopt,
                              int max_iterations = 64);
/// `gen` is "geometric" or "artin-schreier:<a>"; the polynomial defaults to X^p - X - a.
CommandResult cmd_pcs_trace(const CommandOptions& o, const std::string& field, const std::string& gen,
                            const std::optional<std::string>& poly, int steps = 8);
CommandResult cmd_decide_oag(const CommandOptions& o, const std::string& sentence, bool trivial_allowed = false,
                             const std::optional<std::string>& group = std::nullopt);
CommandResult cmd_verify_suite(const CommandOptions& o, const std::optional<std::string>& filter = std::nullopt);

}  // namespace tamefield

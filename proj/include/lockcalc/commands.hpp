#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lockcalc/config.hpp"
#include "lockcalc/report.hpp"

namespace lockcalc {

enum class Subcommand { project, compare, consistency, endstate, finalsize, sweep, paper_check };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand s);

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

struct CommandOutput {
    std::string data;  // the requested format only
    int exit_code = kExitOk;
};

/// Runs one subcommand. Errors propagate as lockcalc::Error; only paper-check
/// sets a non-zero exit code itself.
CommandOutput run_subcommand(const RunConfig& config, Subcommand command, OutputFormat format);

/// Tables behind each subcommand, exposed for tests.
Table project_table(const RunConfig& config);
Table compare_table(const RunConfig& config);
Table consistency_table(const RunConfig& config);
Table endstate_table(const RunConfig& config);
Table finalsize_table(const RunConfig& config);
Table sweep_table(const RunConfig& config);

}  // namespace lockcalc

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lockcalc/decision.hpp"
#include "lockcalc/epidemic.hpp"
#include "lockcalc/option_value.hpp"
#include "lockcalc/qaly.hpp"
#include "lockcalc/scenario.hpp"

namespace lockcalc {

enum class OutputFormat { csv, table, svg };

std::optional<OutputFormat> parse_output_format(std::string_view s);
std::string_view to_string(OutputFormat f);

struct ComparisonConfig {
    GeometricScenario ease;
    GeometricScenario lock;
    double lockdown_quarter_cost = 200e9;
    bool include_illness = false;
    bool include_aftereffects = false;

    bool operator==(const ComparisonConfig&) const = default;
};

/// End-state valuation block. The cap, when enabled, takes r0 and population
/// from the epidemic block.
struct OptionValueConfig {
    int horizon_weeks = 26;
    TreatmentDiscoveryModel treatment;
    VaccineModel vaccine;
    bool cap_enabled = true;
    double ifr = 0.006;
    std::vector<EndState> end_states;

    bool operator==(const OptionValueConfig&) const = default;
};

struct SweepConfig {
    std::string parameter = "pounds_per_qaly";
    std::vector<double> values{30000.0, 50000.0, 90000.0, 300000.0};

    bool operator==(const SweepConfig&) const = default;
};

/// Parameters a sweep may vary; each feeds the quarterly comparison.
inline constexpr std::string_view kSweepParameters[] = {
    "pounds_per_qaly", "qalys_per_death", "lockdown_quarter_cost", "ease_factor", "lock_factor"};

struct RunConfig {
    std::vector<GeometricScenario> scenarios;
    QalyValuation valuation;
    IllnessCostParams illness;
    bool derive_bout_cost = false;
    AfterEffectParams aftereffects;
    HospitalizationParams hospitalization;
    DecisionModel decision;
    SearchBox consistency;
    ComparisonConfig comparison;
    OptionValueConfig option_value;
    SirParams epidemic;
    std::vector<double> finalsize_r0_values;
    SweepConfig sweep;
    std::uint64_t seed = 20200612;
    std::int64_t samples = 100000;
    OutputFormat format = OutputFormat::table;

    bool operator==(const RunConfig&) const = default;

    /// The end-state model assembled from the option-value and epidemic blocks.
    EndStateModel end_state_model() const;
    /// Illness parameters with the derived bout cost applied when requested.
    IllnessCostParams effective_illness() const;
};

/// Every value at its published default.
RunConfig default_config();

/// Strict parse: unknown keys, wrong types and invariant violations throw
/// ConfigUnknownKeyError, ConfigValidationError or ConfigParseError.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Fully explicit JSON that parse_config reads back to an equal RunConfig.
std::string serialize_config(const RunConfig& config);

}  // namespace lockcalc

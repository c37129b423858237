#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace lockcalc {

struct QalyValuation {
    double pounds_per_qaly = 30000.0;
    double qalys_per_death = 10.0;  // documented range 5-10

    void validate() const;

    bool operator==(const QalyValuation&) const = default;
};

struct ValuationPreset {
    std::string_view key;
    std::string_view name;
    double pounds_per_qaly;
};

inline constexpr std::array<ValuationPreset, 4> kValuationPresets{{
    {"nice_standard", "NICE standard", 30000.0},
    {"end_of_life", "end-of-life", 50000.0},
    {"trebled", "trebled", 90000.0},
    {"very_rare_diseases", "very rare diseases", 300000.0},
}};

std::optional<ValuationPreset> find_valuation_preset(std::string_view key);

struct IllnessCostParams {
    double qaly_per_bout = 0.02;
    double bouts_per_death = 150.0;
    double flu_baseline_qaly = 0.005;
    double severity_multiplier = 2.0;
    double duration_multiplier = 2.0;
    double implied_mortality_rate = 0.006;

    /// flu_baseline_qaly * severity_multiplier * duration_multiplier.
    double derived_qaly_per_bout() const;
    /// Copy with qaly_per_bout replaced by the derived value.
    IllnessCostParams with_derived_bout_cost() const;
    void validate() const;

    bool operator==(const IllnessCostParams&) const = default;
};

struct AfterEffectParams {
    double prevalence_among_patients = 0.02;
    double quality_decrement = 0.2;
    double decrement_duration_years = 5.0;
    double life_expectancy_loss_years = 2.0;
    double mortality_rate = 0.006;

    void validate() const;

    bool operator==(const AfterEffectParams&) const = default;
};

struct HospitalizationParams {
    double hospitalized_count = 125000.0;
    double reference_deaths = 40000.0;
    double mean_stay_days = 5.0;
    double quality_during_stay = 0.0;

    void validate() const;

    bool operator==(const HospitalizationParams&) const = default;
};

inline constexpr double kDaysPerYear = 365.25;

double death_qaly_cost(double deaths, const QalyValuation& v);
double illness_qaly_per_death(const IllnessCostParams& p);
/// Throws DomainError when mortality_rate is zero.
double aftereffect_qaly_per_death(const AfterEffectParams& p);
double hospitalization_qaly_total(const HospitalizationParams& p);
double total_qaly_per_death(const QalyValuation& v, const IllnessCostParams& i,
                            const AfterEffectParams& a, bool include_illness,
                            bool include_aftereffects);
double monetize(double qalys, const QalyValuation& v);

}  // namespace lockcalc

#include "lockcalc/qaly.hpp"

#include <cmath>
#include <string>

#include "lockcalc/errors.hpp"

namespace lockcalc {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }
bool non_negative(double x) { return x >= 0.0 && std::isfinite(x); }
bool unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

void QalyValuation::validate() const {
    require(positive(pounds_per_qaly), "pounds_per_qaly must be > 0");
    require(positive(qalys_per_death), "qalys_per_death must be > 0");
}

std::optional<ValuationPreset> find_valuation_preset(std::string_view key) {
    for (const auto& p : kValuationPresets)
        if (p.key == key) return p;
    return std::nullopt;
}

double IllnessCostParams::derived_qaly_per_bout() const {
    return flu_baseline_qaly * severity_multiplier * duration_multiplier;
}

IllnessCostParams IllnessCostParams::with_derived_bout_cost() const {
    IllnessCostParams p = *this;
    p.qaly_per_bout = derived_qaly_per_bout();
    return p;
}

void IllnessCostParams::validate() const {
    // A zero bout cost is allowed: it switches the illness term off.
    require(non_negative(qaly_per_bout), "qaly_per_bout must be >= 0");
    require(positive(bouts_per_death), "bouts_per_death must be > 0");
    require(positive(flu_baseline_qaly), "flu_baseline_qaly must be > 0");
    require(positive(severity_multiplier), "severity_multiplier must be > 0");
    require(positive(duration_multiplier), "duration_multiplier must be > 0");
    require(positive(implied_mortality_rate), "implied_mortality_rate must be > 0");
}

void AfterEffectParams::validate() const {
    require(unit_interval(prevalence_among_patients), "prevalence_among_patients must be in [0, 1]");
    require(unit_interval(quality_decrement), "quality_decrement must be in [0, 1]");
    require(non_negative(decrement_duration_years), "decrement_duration_years must be >= 0");
    require(non_negative(life_expectancy_loss_years), "life_expectancy_loss_years must be >= 0");
    require(mortality_rate > 0.0 && mortality_rate <= 1.0, "mortality_rate must be in (0, 1]");
}

void HospitalizationParams::validate() const {
    require(non_negative(hospitalized_count), "hospitalized_count must be >= 0");
    require(non_negative(reference_deaths), "reference_deaths must be >= 0");
    require(non_negative(mean_stay_days), "mean_stay_days must be >= 0");
    require(unit_interval(quality_during_stay), "quality_during_stay must be in [0, 1]");
}

double death_qaly_cost(double deaths, const QalyValuation& v) {
    if (deaths < 0.0) throw DomainError("deaths must be >= 0");
    return deaths * v.qalys_per_death;
}

double illness_qaly_per_death(const IllnessCostParams& p) {
    return p.qaly_per_bout * p.bouts_per_death;
}

double aftereffect_qaly_per_death(const AfterEffectParams& p) {
    if (p.mortality_rate == 0.0) throw DomainError("aftereffect_qaly_per_death: mortality_rate is zero");
    const double sufferers_per_death = p.prevalence_among_patients / p.mortality_rate;
    const double qalys_per_sufferer =
        p.quality_decrement * p.decrement_duration_years + p.life_expectancy_loss_years;
    return sufferers_per_death * qalys_per_sufferer;
}

double hospitalization_qaly_total(const HospitalizationParams& p) {
    return p.hospitalized_count * (p.mean_stay_days / kDaysPerYear) * (1.0 - p.quality_during_stay);
}

double total_qaly_per_death(const QalyValuation& v, const IllnessCostParams& i,
                            const AfterEffectParams& a, bool include_illness,
                            bool include_aftereffects) {
    double total = v.qalys_per_death;
    if (include_illness) total += illness_qaly_per_death(i);
    if (include_aftereffects) total += aftereffect_qaly_per_death(a);
    return total;
}

double monetize(double qalys, const QalyValuation& v) {
    if (qalys < 0.0) throw DomainError("qalys must be >= 0");
    return qalys * v.pounds_per_qaly;
}

}  // namespace lockcalc

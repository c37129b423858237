#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "lockcalc/epidemic.hpp"
#include "lockcalc/qaly.hpp"

namespace lockcalc {

inline constexpr int kWeeksPerQuarter = 13;

enum class DiscoveryMode { deterministic_quarterly, poisson };

/// Treatments arrive over time and each one multiplies mortality by a fixed
/// factor. The clock counts weeks since the pandemic was declared; a discovery
/// landing at time t applies from the following week onwards.
struct TreatmentDiscoveryModel {
    DiscoveryMode mode = DiscoveryMode::deterministic_quarterly;
    double discovery_interval_weeks = 13.0;
    double mortality_multiplier_per_discovery = 0.92;
    double poisson_rate_per_week = 1.0 / 13.0;

    void validate() const;
    /// Discoveries in deterministic mode that apply during absolute week `week`.
    int scheduled_discoveries_by_week(int week) const;

    bool operator==(const TreatmentDiscoveryModel&) const = default;
};

double mortality_multiplier(const TreatmentDiscoveryModel& t, int discoveries);

enum class VaccineEffect { ends_epidemic, transmission_multiplier };

/// Arrival is decided once per quarter of the valuation window; arrival in
/// quarter q acts from week 13q + 1 of the window.
struct VaccineModel {
    double per_quarter_arrival_probability = 0.0;
    VaccineEffect effect = VaccineEffect::ends_epidemic;
    double transmission_multiplier_value = 1.0;

    void validate() const;

    bool operator==(const VaccineModel&) const = default;
};

struct EndState {
    std::string label;
    double weekly_deaths = 0.0;
    double weekly_factor_under_policy = 1.0;
    double cumulative_infected_fraction = 0.0;
    int weeks_since_pandemic_start = 0;

    void validate() const;

    bool operator==(const EndState&) const = default;
};

/// Everything that two compared end states must share.
struct EndStateModel {
    int horizon_weeks = 26;
    TreatmentDiscoveryModel treatment;
    VaccineModel vaccine;
    std::optional<SirParams> cap;  // population must be set when present
    double ifr = 0.006;

    void validate() const;

    bool operator==(const EndStateModel&) const = default;
};

struct EndStateValuation {
    double expected_future_deaths = 0.0;
    double expected_future_qalys = 0.0;
    double monetized = 0.0;
    double standard_error = 0.0;  // of expected_future_deaths
    std::int64_t samples = 0;
};

struct MonteCarloOptions {
    std::int64_t samples = 100000;
    std::uint64_t seed = 20200612;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Deaths the remaining susceptible pool of `state` can still produce, or
/// +infinity when no cap is configured.
double future_death_ceiling(const EndState& state, const std::optional<SirParams>& cap,
                            double ifr);

/// Deterministic future deaths over `horizon_weeks` with scheduled treatment
/// discoveries and no vaccine. Requires deterministic discovery mode.
double project_future_deaths(const EndState& state, int horizon_weeks,
                             const TreatmentDiscoveryModel& t,
                             const std::optional<SirParams>& cap, double ifr);

/// Future deaths along one sample path. `discovery_times` must be sorted;
/// `vaccine_quarter` is the 1-based arrival quarter or 0 for none.
double path_future_deaths(const EndState& state, const EndStateModel& model,
                          std::span<const double> discovery_times, int vaccine_quarter);

EndStateValuation mc_end_state_value(const EndState& state, const EndStateModel& model,
                                     const QalyValuation& v, const MonteCarloOptions& mc);

struct EndStateComparison {
    EndStateValuation a;
    EndStateValuation b;
    double difference = 0.0;  // monetized(b) - monetized(a), GBP
    /// Monetized value of the extra future attack state a faces because fewer
    /// of its infections are out of the way. Zero without a cap.
    double susceptible_credit = 0.0;
};

/// Both states must sit at the same point on the pandemic clock.
EndStateComparison end_state_value_difference(const EndState& a, const EndState& b,
                                              const EndStateModel& model,
                                              const QalyValuation& v,
                                              const MonteCarloOptions& mc);

// Sampling primitives, exposed for tests.
namespace rng {
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);
}  // namespace rng

/// Pairwise (cascade) summation; result is independent of evaluation order.
double pairwise_sum(std::span<const double> values);

}  // namespace lockcalc

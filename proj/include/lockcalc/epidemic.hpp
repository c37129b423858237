#pragma once

#include <optional>

namespace lockcalc {

struct SirParams {
    double r0 = 2.0;
    double initial_susceptible_fraction = 1.0;
    std::optional<double> population;

    void validate() const;

    bool operator==(const SirParams&) const = default;
};

struct FinalSizeResult {
    double attack_rate = 0.0;     // fraction of the population newly infected
    double herd_threshold = 0.0;
    double overshoot = 0.0;       // immunity reached beyond the threshold
    double residual = 0.0;
    int iterations = 0;
};

inline constexpr double kFinalSizeTolerance = 1e-12;
inline constexpr int kFinalSizeMaxIterations = 200;

/// max(0, 1 - 1/r0).
double herd_immunity_threshold(const SirParams& p);

/// Closed SIR final size with permanent immunity and an infinitesimal seed.
/// The future attack a among initial susceptibles s0 solves
///     a = s0 * (1 - exp(-r0 * a)),
/// which reduces to r = 1 - exp(-r0 r) for a fully susceptible population.
/// The nontrivial root is bracketed away from zero and bisected.
FinalSizeResult final_size(const SirParams& p);

/// Future attack starting from 1 - already_infected_a minus the same starting
/// from 1 - already_infected_b. Positive when state a faces the larger future
/// epidemic.
double remaining_susceptible_advantage(double already_infected_a, double already_infected_b,
                                       const SirParams& p);

}  // namespace lockcalc

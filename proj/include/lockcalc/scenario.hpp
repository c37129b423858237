#pragma once

#include <span>
#include <string>
#include <vector>

namespace lockcalc {

/// Two-parameter epidemic scenario: a weekly death rate that is multiplied by
/// a constant factor every week.
struct GeometricScenario {
    double initial_weekly_deaths = 0.0;  // deaths/week at week 0
    double weekly_factor = 1.0;          // F < 1 suppression, F > 1 growth
    int horizon_weeks = 1;
    std::string label;

    /// Throws DomainError if any invariant is violated.
    void validate() const;

    bool operator==(const GeometricScenario&) const = default;
};

struct Trajectory {
    std::vector<double> weekly_deaths;  // index 0 is week 1
    double cumulative_deaths = 0.0;
    bool capped = false;
};

/// Sum of factor^n for n = 1..weeks. Exact limit branch at factor == 1.
double geometric_series(double factor, int weeks);

/// Death rate in week `week` (1-based): D * F^week.
double weekly_deaths(const GeometricScenario& s, int week);

double cumulative_deaths(const GeometricScenario& s);

/// Cumulative deaths under `ease` minus those under `lock`. Negative when the
/// lockdown scenario is the deadlier one.
double excess_deaths(const GeometricScenario& ease, const GeometricScenario& lock);

Trajectory project(const GeometricScenario& s);

/// Projects the scenario but stops once cumulative implied infections
/// (deaths / ifr) would pass population * max_infected_fraction. The week that
/// crosses the ceiling emits the residual; later weeks emit zero.
Trajectory project_with_cap(const GeometricScenario& s, double population,
                            double max_infected_fraction, double ifr);

/// Residual-then-zero truncation of an arbitrary weekly series at a ceiling
/// on cumulative deaths.
Trajectory cap_series(std::span<const double> weekly, double death_ceiling);

}  // namespace lockcalc

#include "lockcalc/scenario.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lockcalc/errors.hpp"

namespace lockcalc {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw NumericError(std::string(what) + " is not finite");
}

// Weeks after the cap has bitten are never evaluated, so a runaway series
// cannot overflow once truncated.
template <class WeekFn>
Trajectory accumulate_capped(int weeks, double ceiling, WeekFn week_deaths) {
    Trajectory t;
    t.weekly_deaths.reserve(static_cast<std::size_t>(weeks > 0 ? weeks : 0));
    for (int n = 1; n <= weeks; ++n) {
        if (t.capped) {
            t.weekly_deaths.push_back(0.0);
            continue;
        }
        const double d = week_deaths(n);
        require_finite(d, "weekly deaths");
        if (t.cumulative_deaths + d > ceiling) {
            t.weekly_deaths.push_back(ceiling - t.cumulative_deaths);
            t.cumulative_deaths = ceiling;
            t.capped = true;
        } else {
            t.weekly_deaths.push_back(d);
            t.cumulative_deaths += d;
        }
    }
    return t;
}

}  // namespace

void GeometricScenario::validate() const {
    const std::string where = label.empty() ? "scenario" : "scenario '" + label + "'";
    if (!(initial_weekly_deaths > 0.0) || !std::isfinite(initial_weekly_deaths))
        throw DomainError(where + ": initial_weekly_deaths must be > 0");
    if (!(weekly_factor > 0.0) || !std::isfinite(weekly_factor))
        throw DomainError(where + ": weekly_factor must be > 0");
    if (horizon_weeks < 1) throw DomainError(where + ": horizon_weeks must be >= 1");
}

double geometric_series(double factor, int weeks) {
    if (weeks <= 0) return 0.0;
    if (factor == 1.0) return static_cast<double>(weeks);
    // F (F^N - 1) / (F - 1); F - 1 is exact near 1, and expm1/log1p keep
    // F^N - 1 accurate there.
    const double d = factor - 1.0;
    return factor * std::expm1(weeks * std::log1p(d)) / d;
}

double weekly_deaths(const GeometricScenario& s, int week) {
    s.validate();
    if (week < 1 || week > s.horizon_weeks)
        throw DomainError("week " + std::to_string(week) + " outside 1.." +
                          std::to_string(s.horizon_weeks));
    return s.initial_weekly_deaths * std::pow(s.weekly_factor, week);
}

double cumulative_deaths(const GeometricScenario& s) {
    s.validate();
    const double total = s.initial_weekly_deaths * geometric_series(s.weekly_factor, s.horizon_weeks);
    require_finite(total, "cumulative deaths");
    return total;
}

double excess_deaths(const GeometricScenario& ease, const GeometricScenario& lock) {
    if (ease.horizon_weeks != lock.horizon_weeks)
        throw DomainError("excess_deaths: scenarios have different horizons (" +
                          std::to_string(ease.horizon_weeks) + " vs " +
                          std::to_string(lock.horizon_weeks) + ")");
    return cumulative_deaths(ease) - cumulative_deaths(lock);
}

Trajectory project(const GeometricScenario& s) {
    s.validate();
    Trajectory t;
    t.weekly_deaths.reserve(static_cast<std::size_t>(s.horizon_weeks));
    for (int n = 1; n <= s.horizon_weeks; ++n) {
        const double d = s.initial_weekly_deaths * std::pow(s.weekly_factor, n);
        require_finite(d, "weekly deaths");
        t.weekly_deaths.push_back(d);
        t.cumulative_deaths += d;
    }
    return t;
}

Trajectory cap_series(std::span<const double> weekly, double death_ceiling) {
    return accumulate_capped(static_cast<int>(weekly.size()), death_ceiling,
                             [&](int n) { return weekly[static_cast<std::size_t>(n - 1)]; });
}

Trajectory project_with_cap(const GeometricScenario& s, double population,
                            double max_infected_fraction, double ifr) {
    s.validate();
    if (!(population > 0.0)) throw DomainError("population must be > 0");
    if (!(max_infected_fraction > 0.0 && max_infected_fraction <= 1.0))
        throw DomainError("max_infected_fraction must be in (0, 1]");
    if (!(ifr > 0.0 && ifr < 1.0)) throw DomainError("ifr must be in (0, 1)");

    const double ceiling = population * max_infected_fraction * ifr;
    require_finite(ceiling, "death ceiling");
    return accumulate_capped(s.horizon_weeks, ceiling, [&](int n) {
        return s.initial_weekly_deaths * std::pow(s.weekly_factor, n);
    });
}

}  // namespace lockcalc

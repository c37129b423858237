#pragma once

#include <vector>

#include "lockcalc/qaly.hpp"
#include "lockcalc/scenario.hpp"

namespace lockcalc {

/// Lockdown/ease toy model. Costs are per week of lockdown (L) and per death
/// (C); M deaths occur in week zero; lockdown multiplies weekly deaths by F0,
/// easing by F1.
struct DecisionModel {
    double lockdown_cost_per_week = 1.0;
    double cost_per_death = 1.0;
    double initial_weekly_deaths = 1.0;
    double lockdown_factor = 0.5;
    double easing_factor = 1.05;
    int horizon_weeks = 12;

    void validate() const;

    bool operator==(const DecisionModel&) const = default;
};

/// Both sides of a strict inequality lhs < rhs. Equality resolves to lockdown.
struct Verdict {
    bool ease = false;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Week-n rolling decision: ease iff C M F1^n (F1 - F0) < L.
Verdict weekly_easing_condition(const DecisionModel& m, int week);

/// One-off decision over the whole horizon: ease iff
/// C M (sum_{k=1..N} F1^k - sum_{k=1..N} F0^k) < N L.
Verdict block_easing_condition(const DecisionModel& m);

/// True iff easing at the final week implies easing at every earlier week.
bool weekly_monotonicity_check(const DecisionModel& m);

struct InconsistencyWitness {
    DecisionModel model;
    std::vector<bool> weekly_verdicts;  // ease = true, weeks 1..N
    bool block_verdict = false;
    Verdict final_week;  // the week-N weekly margins
    Verdict block;
};

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    std::vector<double> values() const;

    bool operator==(const GridAxis&) const = default;
};

/// L is set to cost_ratio * C * M, so cost_ratio == 1 is the L = CM family.
struct SearchBox {
    GridAxis lockdown_factor{0.1, 0.9, 9};
    GridAxis easing_factor{1.01, 1.2, 20};
    int min_horizon = 1;
    int max_horizon = 20;
    GridAxis cost_ratio{1.0, 1.0, 1};
    double cost_per_death = 1.0;
    double initial_weekly_deaths = 1.0;

    void validate() const;

    bool operator==(const SearchBox&) const = default;
};

/// Re-evaluates both inequalities by direct summation, independently of the
/// closed forms used by the search.
bool verify_witness(const InconsistencyWitness& w);

/// Grid search for models where every weekly decision eases but the block
/// decision locks down. Witnesses are re-verified and sorted by
/// (F0, F1, N, L).
std::vector<InconsistencyWitness> find_inconsistency(const SearchBox& box);

struct QuarterlyComparison {
    double ease_deaths = 0.0;
    double lock_deaths = 0.0;
    double excess_deaths = 0.0;
    double qalys_per_death = 0.0;
    double qaly_cost = 0.0;
    double monetized_cost = 0.0;
    double lockdown_cost = 0.0;
    bool ease = false;  // monetized_cost < lockdown_cost
};

struct ComparisonExtensions {
    bool include_illness = false;
    bool include_aftereffects = false;
    IllnessCostParams illness;
    AfterEffectParams aftereffects;
};

/// Scenarios must share D and N. Without extensions only death QALYs count.
QuarterlyComparison quarterly_comparison(const GeometricScenario& ease,
                                         const GeometricScenario& lock,
                                         double lockdown_quarter_cost,
                                         const QalyValuation& v,
                                         const ComparisonExtensions& ext = {});

}  // namespace lockcalc

#include "lockcalc/decision.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "lockcalc/errors.hpp"

namespace lockcalc {

void DecisionModel::validate() const {
    if (!(lockdown_factor > 0.0 && lockdown_factor < 1.0))
        throw DomainError("lockdown_factor must be in (0, 1)");
    if (!(easing_factor > 1.0) || !std::isfinite(easing_factor))
        throw DomainError("easing_factor must be > 1");
    if (!(lockdown_cost_per_week > 0.0)) throw DomainError("lockdown_cost_per_week must be > 0");
    if (!(cost_per_death > 0.0)) throw DomainError("cost_per_death must be > 0");
    if (!(initial_weekly_deaths > 0.0)) throw DomainError("initial_weekly_deaths must be > 0");
    if (horizon_weeks < 1) throw DomainError("horizon_weeks must be >= 1");
}

Verdict weekly_easing_condition(const DecisionModel& m, int week) {
    m.validate();
    if (week < 1 || week > m.horizon_weeks)
        throw DomainError("week " + std::to_string(week) + " outside 1.." +
                          std::to_string(m.horizon_weeks));
    Verdict v;
    v.lhs = m.cost_per_death * m.initial_weekly_deaths * std::pow(m.easing_factor, week) *
            (m.easing_factor - m.lockdown_factor);
    v.rhs = m.lockdown_cost_per_week;
    v.ease = v.lhs < v.rhs;
    return v;
}

Verdict block_easing_condition(const DecisionModel& m) {
    m.validate();
    const int n = m.horizon_weeks;
    Verdict v;
    v.lhs = m.cost_per_death * m.initial_weekly_deaths *
            (geometric_series(m.easing_factor, n) - geometric_series(m.lockdown_factor, n));
    v.rhs = n * m.lockdown_cost_per_week;
    v.ease = v.lhs < v.rhs;
    return v;
}

bool weekly_monotonicity_check(const DecisionModel& m) {
    if (!weekly_easing_condition(m, m.horizon_weeks).ease) return true;
    for (int n = 1; n < m.horizon_weeks; ++n)
        if (!weekly_easing_condition(m, n).ease) return false;
    return true;
}

std::vector<double> GridAxis::values() const {
    std::vector<double> out;
    if (steps <= 1) {
        out.push_back(min);
        return out;
    }
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out.push_back(min + (max - min) * i / (steps - 1));
    return out;
}

void SearchBox::validate() const {
    auto check_axis = [](const GridAxis& a, const char* name) {
        if (a.steps < 1) throw DomainError(std::string(name) + ": steps must be >= 1");
        if (a.max < a.min) throw DomainError(std::string(name) + ": max < min");
    };
    check_axis(lockdown_factor, "lockdown_factor");
    check_axis(easing_factor, "easing_factor");
    check_axis(cost_ratio, "cost_ratio");
    if (min_horizon < 1 || max_horizon < min_horizon)
        throw DomainError("horizon range must satisfy 1 <= min <= max");
    if (!(cost_per_death > 0.0) || !(initial_weekly_deaths > 0.0))
        throw DomainError("cost_per_death and initial_weekly_deaths must be > 0");
}

bool verify_witness(const InconsistencyWitness& w) {
    const DecisionModel& m = w.model;
    const double cm = m.cost_per_death * m.initial_weekly_deaths;
    const double gap = m.easing_factor - m.lockdown_factor;

    // Weekly: C M F1^n (F1 - F0) < L for every n, F1^n by repeated product.
    double f1_power = 1.0;
    for (int n = 1; n <= m.horizon_weeks; ++n) {
        f1_power *= m.easing_factor;
        if (!(cm * f1_power * gap < m.lockdown_cost_per_week)) return false;
    }
    // Block: deaths averted by lockdown, summed week by week.
    double ease_sum = 0.0, lock_sum = 0.0, p1 = 1.0, p0 = 1.0;
    for (int n = 1; n <= m.horizon_weeks; ++n) {
        p1 *= m.easing_factor;
        p0 *= m.lockdown_factor;
        ease_sum += p1;
        lock_sum += p0;
    }
    const bool block_eases = cm * (ease_sum - lock_sum) < m.horizon_weeks * m.lockdown_cost_per_week;
    return !block_eases;
}

std::vector<InconsistencyWitness> find_inconsistency(const SearchBox& box) {
    box.validate();
    std::vector<InconsistencyWitness> out;
    const double cm = box.cost_per_death * box.initial_weekly_deaths;

    for (double f0 : box.lockdown_factor.values()) {
        for (double f1 : box.easing_factor.values()) {
            if (!(f0 > 0.0 && f0 < 1.0 && f1 > 1.0)) continue;
            for (double ratio : box.cost_ratio.values()) {
                if (!(ratio > 0.0)) continue;
                for (int n = box.min_horizon; n <= box.max_horizon; ++n) {
                    DecisionModel m;
                    m.cost_per_death = box.cost_per_death;
                    m.initial_weekly_deaths = box.initial_weekly_deaths;
                    m.lockdown_cost_per_week = ratio * cm;
                    m.lockdown_factor = f0;
                    m.easing_factor = f1;
                    m.horizon_weeks = n;

                    // Easing weeks form a prefix, so the last week decides.
                    const Verdict last = weekly_easing_condition(m, n);
                    if (!last.ease) continue;
                    const Verdict block = block_easing_condition(m);
                    if (block.ease) continue;

                    InconsistencyWitness w;
                    w.model = m;
                    w.weekly_verdicts.reserve(static_cast<std::size_t>(n));
                    for (int k = 1; k <= n; ++k)
                        w.weekly_verdicts.push_back(weekly_easing_condition(m, k).ease);
                    w.block_verdict = block.ease;
                    w.final_week = last;
                    w.block = block;
                    if (verify_witness(w)) out.push_back(std::move(w));
                }
            }
        }
    }

    auto key = [](const InconsistencyWitness& w) {
        return std::make_tuple(w.model.lockdown_factor, w.model.easing_factor,
                               w.model.horizon_weeks, w.model.lockdown_cost_per_week);
    };
    std::sort(out.begin(), out.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return out;
}

QuarterlyComparison quarterly_comparison(const GeometricScenario& ease,
                                         const GeometricScenario& lock,
                                         double lockdown_quarter_cost,
                                         const QalyValuation& v,
                                         const ComparisonExtensions& ext) {
    if (ease.initial_weekly_deaths != lock.initial_weekly_deaths)
        throw DomainError("quarterly_comparison: scenarios must share the initial weekly deaths");
    if (!(lockdown_quarter_cost > 0.0)) throw DomainError("lockdown_quarter_cost must be > 0");
    v.validate();

    QuarterlyComparison c;
    c.ease_deaths = cumulative_deaths(ease);
    c.lock_deaths = cumulative_deaths(lock);
    c.excess_deaths = excess_deaths(ease, lock);
    c.qalys_per_death = total_qaly_per_death(v, ext.illness, ext.aftereffects,
                                             ext.include_illness, ext.include_aftereffects);
    QalyValuation per_death = v;
    per_death.qalys_per_death = c.qalys_per_death;
    // A lockdown that costs lives saves nothing; excess below zero counts as zero.
    c.qaly_cost = death_qaly_cost(std::max(0.0, c.excess_deaths), per_death);
    c.monetized_cost = monetize(c.qaly_cost, v);
    c.lockdown_cost = lockdown_quarter_cost;
    c.ease = c.monetized_cost < c.lockdown_cost;
    return c;
}

}  // namespace lockcalc

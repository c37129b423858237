#include "lockcalc/paper_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "lockcalc/commands.hpp"
#include "lockcalc/config.hpp"
#include "lockcalc/decision.hpp"
#include "lockcalc/epidemic.hpp"
#include "lockcalc/option_value.hpp"
#include "lockcalc/qaly.hpp"
#include "lockcalc/scenario.hpp"

namespace lockcalc {

namespace {

GeometricScenario scenario(double d, double f, int n) {
    GeometricScenario s;
    s.initial_weekly_deaths = d;
    s.weekly_factor = f;
    s.horizon_weeks = n;
    return s;
}

bool within_rel(double x, double ref, double tol) { return std::abs(x - ref) <= tol * std::abs(ref); }

double relative_error(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53);
    }
    int integer(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 gen_;
};

class Checks {
public:
    void add(std::string id, std::string description, std::string measured, std::string expected, bool pass) {
        results_.push_back({std::move(id), std::move(description), std::move(measured), std::move(expected), pass});
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

void check_projection(Checks& c) {
    const double cum39 = cumulative_deaths(scenario(1230, 1.15, 39));
    c.add("1", "cumulative deaths D=1230 F=1.15 N=39", fmt::format("{:.1f}", cum39), "2187051 +-0.01%",
          within_rel(cum39, 2187051.0, 1e-4));

    const double w13_ease = weekly_deaths(scenario(1230, 1.15, 13), 13);
    c.add("2a", "week-13 death rate D=1230 F=1.15", fmt::format("{:.2f}", w13_ease), "7572 +-0.2%",
          within_rel(w13_ease, 7572.0, 2e-3));
    const double w13_lock = weekly_deaths(scenario(1230, 0.7, 13), 13);
    c.add("2b", "week-13 death rate D=1230 F=0.7", fmt::format("{:.3f}", w13_lock), "in [11, 14] (published 13)",
          w13_lock >= 11.0 && w13_lock <= 14.0);

    const auto ease = scenario(7572, 1.15, 13);
    const auto lock = scenario(7572, 0.7, 13);
    const double q_ease = cumulative_deaths(ease);
    const double q_lock = cumulative_deaths(lock);
    const double excess = excess_deaths(ease, lock);
    c.add("3a", "quarter deaths D=7572 F=1.15 N=13", fmt::format("{:.1f}", q_ease), "299100 +-2% (about 300000)",
          within_rel(q_ease, 299100.0, 0.02) && within_rel(q_ease, 300000.0, 0.02));
    c.add("3b", "quarter deaths D=7572 F=0.7 N=13", fmt::format("{:.1f}", q_lock), "17497 +-2% (about 17500)",
          within_rel(q_lock, 17497.0, 0.02) && within_rel(q_lock, 17500.0, 0.02));
    c.add("3c", "excess deaths easing vs lockdown", fmt::format("{:.1f}", excess), "282500 +-2%",
          within_rel(excess, 282500.0, 0.02));

    QalyValuation nice;
    const auto at_nice = quarterly_comparison(ease, lock, 200e9, nice);
    c.add("4a", "monetized QALY cost at 10 QALY/death, GBP 30000/QALY",
          fmt::format("GBP {:.2f}bn", at_nice.monetized_cost / 1e9), "in (80bn, 85bn], published 84bn",
          at_nice.monetized_cost > 80e9 && at_nice.monetized_cost <= 85e9);
    c.add("4b", "verdict at GBP 30000/QALY vs GBP 200bn", at_nice.ease ? "ease" : "lockdown", "ease", at_nice.ease);
    QalyValuation trebled;
    trebled.pounds_per_qaly = 90000.0;
    const auto at_treble = quarterly_comparison(ease, lock, 200e9, trebled);
    c.add("4c", "verdict at GBP 90000/QALY vs GBP 200bn",
          fmt::format("{} (GBP {:.2f}bn)", at_treble.ease ? "ease" : "lockdown", at_treble.monetized_cost / 1e9),
          "lockdown", !at_treble.ease);
}

void check_treatments(Checks& c) {
    TreatmentDiscoveryModel t;
    const double exact[] = {0.92, 0.8464, 0.778688};
    const double published[] = {0.92, 0.84, 0.78};
    for (int m = 1; m <= 3; ++m) {
        const double x = mortality_multiplier(t, m);
        c.add(fmt::format("5.{}", m), fmt::format("mortality multiplier after {} discoveries", m),
              fmt::format("{:.6f}", x), fmt::format("{}", exact[m - 1]),
              std::abs(x - exact[m - 1]) <= 1e-12);
        const double rounded = std::round(x * 100.0) / 100.0;
        c.add(fmt::format("5.{}r", m), fmt::format("multiplier after {} discoveries rounded to 2 dp", m),
              fmt::format("{:.2f}", rounded), fmt::format("{:.2f} (published)", published[m - 1]),
              std::abs(rounded - published[m - 1]) < 1e-9);
    }
}

void check_illness(Checks& c) {
    const IllnessCostParams illness;
    const double bout = illness.derived_qaly_per_bout();
    c.add("6a", "COVID bout cost = 0.005 x 2 x 2", fmt::format("{}", bout), "0.02 (1e-9 rel)",
          relative_error(bout, 0.02) <= 1e-9);
    const double per_death = illness_qaly_per_death(illness.with_derived_bout_cost());
    c.add("6b", "illness QALYs per death = 150 x 0.02", fmt::format("{}", per_death), "3 (1e-9 rel)",
          relative_error(per_death, 3.0) <= 1e-9);
    const double after = aftereffect_qaly_per_death(AfterEffectParams{});
    c.add("6c", "after-effect QALYs per death", fmt::format("{}", after), "10 (1e-9 rel)",
          relative_error(after, 10.0) <= 1e-9);
    const double hosp = hospitalization_qaly_total(HospitalizationParams{});
    c.add("6d", "hospitalization QALYs", fmt::format("{:.1f}", hosp), "in [1500, 2100] (published ~2000)",
          hosp >= 1500.0 && hosp <= 2100.0);
    QalyValuation low, high;
    low.qalys_per_death = 5.0;
    high.qalys_per_death = 10.0;
    const double d_low = death_qaly_cost(40000.0, low);
    const double d_high = death_qaly_cost(40000.0, high);
    c.add("6e", "death QALYs for 40000 deaths at 5 and 10 QALY/death", fmt::format("{} / {}", d_low, d_high),
          "200000 / 400000 exactly", d_low == 200000.0 && d_high == 400000.0);
}

void check_witness(Checks& c) {
    SearchBox box;
    box.lockdown_factor = {0.3, 0.7, 5};
    box.easing_factor = {1.03, 1.07, 5};
    box.min_horizon = 1;
    box.max_horizon = 15;
    const auto witnesses = find_inconsistency(box);
    const auto hit = std::find_if(witnesses.begin(), witnesses.end(), [](const auto& w) {
        return std::abs(w.model.lockdown_factor - 0.5) < 1e-9 && std::abs(w.model.easing_factor - 1.05) < 1e-9 &&
               w.model.horizon_weeks == 12;
    });
    const bool found = hit != witnesses.end() && hit->weekly_verdicts.size() == 12 &&
                       std::all_of(hit->weekly_verdicts.begin(), hit->weekly_verdicts.end(),
                                   [](bool e) { return e; }) &&
                       !hit->block_verdict && verify_witness(*hit);
    c.add("7a", "witness at L=CM F1=1.05 F0=0.5 N=12 found and verified",
          fmt::format("{} witnesses, target {}", witnesses.size(), found ? "present" : "missing"),
          "present, 12 x ease, block lockdown", found);

    DecisionModel m;
    const Verdict week12 = weekly_easing_condition(m, 12);
    const Verdict block = block_easing_condition(m);
    c.add("7b", "week-12 margin F1^12 (F1 - F0)", fmt::format("{:.6f} vs {}", week12.lhs, week12.rhs),
          "0.98776 (+-1e-4) < 1", week12.ease && std::abs(week12.lhs - 0.98776) < 1e-4);
    c.add("7c", "block margin over 12 weeks", fmt::format("{:.4f} vs {}", block.lhs, block.rhs), "15.713 > 12",
          !block.ease && std::abs(block.lhs - 15.713) < 1e-3);
}

void check_properties(Checks& c, const PaperCheckOptions& options) {
    Sampler rng(options.seed);

    // (a) closed form against direct summation.
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto s = scenario(rng.uniform(1.0, 10000.0), rng.uniform(0.1, 2.0), rng.integer(1, 100));
        double direct = 0.0;
        for (int n = 1; n <= s.horizon_weeks; ++n) direct += weekly_deaths(s, n);
        worst = std::max(worst, relative_error(cumulative_deaths(s), direct));
    }
    c.add("8a", "closed form vs summation, 1000 scenarios", fmt::format("max rel err {:.2e}", worst), "<= 1e-9",
          worst <= 1e-9);

    // (b) easing weeks form a prefix; (c) verdicts survive common scaling.
    int prefix_failures = 0, scale_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        DecisionModel m;
        m.cost_per_death = rng.uniform(1.0, 1e6);
        m.initial_weekly_deaths = rng.uniform(1.0, 1e4);
        m.lockdown_cost_per_week = m.cost_per_death * m.initial_weekly_deaths * rng.uniform(0.01, 5.0);
        m.lockdown_factor = rng.uniform(0.05, 0.99);
        m.easing_factor = rng.uniform(1.001, 1.5);
        m.horizon_weeks = rng.integer(1, 40);
        bool seen_lockdown = false;
        for (int n = 1; n <= m.horizon_weeks; ++n) {
            const bool ease = weekly_easing_condition(m, n).ease;
            if (ease && seen_lockdown) ++prefix_failures;
            seen_lockdown = seen_lockdown || !ease;
        }
        if (!weekly_monotonicity_check(m)) ++prefix_failures;

        // Scaling by a power of two keeps both sides exactly proportional.
        DecisionModel scaled = m;
        const double k = std::ldexp(1.0, rng.integer(-20, 20));
        scaled.cost_per_death *= k;
        scaled.lockdown_cost_per_week *= k;
        for (int n = 1; n <= m.horizon_weeks; ++n)
            if (weekly_easing_condition(m, n).ease != weekly_easing_condition(scaled, n).ease) ++scale_failures;
        if (block_easing_condition(m).ease != block_easing_condition(scaled).ease) ++scale_failures;
    }
    c.add("8b", "weekly easing weeks form a prefix, 1000 models", fmt::format("{} violations", prefix_failures),
          "0", prefix_failures == 0);
    c.add("8c", "verdicts invariant under scaling of (C M, L)", fmt::format("{} violations", scale_failures), "0",
          scale_failures == 0);

    // (d) final-size fixed point.
    double worst_residual = 0.0;
    bool overshoot_positive = true;
    for (int i = 0; i < 200; ++i) {
        SirParams p;
        p.r0 = rng.uniform(1.0 + 1e-6, 10.0);
        const auto fs = final_size(p);
        worst_residual = std::max(worst_residual, std::abs(fs.attack_rate - (1.0 - std::exp(-p.r0 * fs.attack_rate))));
        overshoot_positive = overshoot_positive && fs.overshoot > 0.0;
    }
    c.add("8d", "final-size residual and overshoot, 200 r0 in (1, 10]",
          fmt::format("max residual {:.2e}, overshoot {}", worst_residual, overshoot_positive ? "> 0" : "<= 0 seen"),
          "< 1e-10, > 0", worst_residual < 1e-10 && overshoot_positive);

    // (e) Monte Carlo against the closed-form two-quarter expectation.
    EndState state;
    state.weekly_deaths = 1000.0;
    state.weekly_factor_under_policy = 1.1;
    state.weeks_since_pandemic_start = 26;
    EndStateModel model;
    model.horizon_weeks = 26;
    model.treatment.mortality_multiplier_per_discovery = 1.0;
    model.vaccine.per_quarter_arrival_probability = 0.3;
    MonteCarloOptions mc;
    mc.samples = options.mc_samples;
    mc.seed = options.seed;
    const auto mc_value = mc_end_state_value(state, model, QalyValuation{}, mc);
    double q1 = 0.0, q2 = 0.0;
    for (int n = 1; n <= 26; ++n) (n <= 13 ? q1 : q2) += 1000.0 * std::pow(1.1, n);
    const double oracle = q1 + (1.0 - 0.3) * q2;
    const double z = std::abs(mc_value.expected_future_deaths - oracle) / mc_value.standard_error;
    c.add("8e", "Monte Carlo mean vs Q1 + (1-p) Q2",
          fmt::format("{:.1f} vs {:.1f} ({:.2f} SE)", mc_value.expected_future_deaths, oracle, z), "within 3 SE",
          z <= 3.0);

    // (f) degenerate randomness collapses to the deterministic projection.
    EndStateModel flat;
    flat.horizon_weeks = 13;
    EndState lockdown_state;
    lockdown_state.weekly_deaths = 7572.0;
    lockdown_state.weekly_factor_under_policy = 0.7;
    lockdown_state.weeks_since_pandemic_start = 26;
    MonteCarloOptions small = mc;
    small.samples = 1000;
    const auto collapsed = mc_end_state_value(lockdown_state, flat, QalyValuation{}, small);
    const double projected = project_future_deaths(lockdown_state, 13, flat.treatment, std::nullopt, flat.ifr);
    c.add("8f", "zero-variance Monte Carlo collapse",
          fmt::format("mean {:.4f}, projection {:.4f}, SE {}", collapsed.expected_future_deaths, projected,
                      collapsed.standard_error),
          "equal, SE = 0 exactly",
          collapsed.standard_error == 0.0 && collapsed.expected_future_deaths == projected);
}

void check_reproducibility(Checks& c, const PaperCheckOptions& options) {
    RunConfig config = default_config();
    config.seed = options.seed;
    config.samples = 2000;
    config.option_value.treatment.mode = DiscoveryMode::poisson;
    config.option_value.vaccine.per_quarter_arrival_probability = 0.1;
    const auto first = run_subcommand(config, Subcommand::endstate, OutputFormat::csv).data;
    const auto second = run_subcommand(config, Subcommand::endstate, OutputFormat::csv).data;
    c.add("9", "endstate CSV byte-identical across runs", first == second ? "identical" : "different", "identical",
          first == second && !first.empty());
}

}  // namespace

std::vector<CheckResult> run_paper_check(const PaperCheckOptions& options) {
    Checks c;
    check_projection(c);
    check_treatments(c);
    check_illness(c);
    check_witness(c);
    check_properties(c, options);
    check_reproducibility(c, options);
    return c.take();
}

Table paper_check_table(const std::vector<CheckResult>& results) {
    Table t;
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    t.title = fmt::format("Published-figure check: {}/{} pass", passed, results.size());
    t.columns = {"id", "check", "measured", "expected", "result"};
    for (const auto& r : results)
        t.rows.push_back({r.id, r.description, r.measured, r.expected, std::string(r.pass ? "PASS" : "FAIL")});
    return t;
}

}  // namespace lockcalc

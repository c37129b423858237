#include "lockcalc/commands.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lockcalc/errors.hpp"
#include "lockcalc/paper_check.hpp"

namespace lockcalc {

std::optional<Subcommand> parse_subcommand(std::string_view name) {
    if (name == "project") return Subcommand::project;
    if (name == "compare") return Subcommand::compare;
    if (name == "consistency") return Subcommand::consistency;
    if (name == "endstate") return Subcommand::endstate;
    if (name == "finalsize") return Subcommand::finalsize;
    if (name == "sweep") return Subcommand::sweep;
    if (name == "paper-check") return Subcommand::paper_check;
    return std::nullopt;
}

std::string_view to_string(Subcommand s) {
    switch (s) {
        case Subcommand::project: return "project";
        case Subcommand::compare: return "compare";
        case Subcommand::consistency: return "consistency";
        case Subcommand::endstate: return "endstate";
        case Subcommand::finalsize: return "finalsize";
        case Subcommand::sweep: return "sweep";
        case Subcommand::paper_check: return "paper-check";
    }
    return "?";
}

namespace {

Fixed billions(double gbp) { return {gbp / 1e9, 2}; }
std::int64_t whole_pounds(double gbp) { return static_cast<std::int64_t>(std::llround(gbp)); }

// Input provenance: untouched defaults are the published figures.
std::string input_note(bool is_default) { return is_default ? "published default" : "config"; }

}  // namespace

Table project_table(const RunConfig& config) {
    Table t;
    t.title = "Weekly deaths by scenario";
    t.columns.push_back("week");
    int weeks = 0;
    std::vector<Trajectory> trajectories;
    for (const auto& s : config.scenarios) {
        t.columns.push_back(s.label);
        trajectories.push_back(project(s));
        weeks = std::max(weeks, s.horizon_weeks);
    }
    for (int w = 1; w <= weeks; ++w) {
        std::vector<Cell> row{std::int64_t{w}};
        for (const auto& tr : trajectories) {
            if (w <= static_cast<int>(tr.weekly_deaths.size()))
                row.emplace_back(tr.weekly_deaths[static_cast<std::size_t>(w - 1)]);
            else
                row.emplace_back(std::string{});
        }
        t.rows.push_back(std::move(row));
    }
    std::vector<Cell> total{std::string("total")};
    for (const auto& s : config.scenarios) total.emplace_back(cumulative_deaths(s));
    t.rows.push_back(std::move(total));
    return t;
}

Table compare_table(const RunConfig& config) {
    const auto& cmp = config.comparison;
    const RunConfig defaults = default_config();
    const bool published_inputs = cmp == defaults.comparison && config.valuation.qalys_per_death == 10.0;

    ComparisonExtensions ext;
    ext.include_illness = cmp.include_illness;
    ext.include_aftereffects = cmp.include_aftereffects;
    ext.illness = config.effective_illness();
    ext.aftereffects = config.aftereffects;
    const QuarterlyComparison q =
        quarterly_comparison(cmp.ease, cmp.lock, cmp.lockdown_quarter_cost, config.valuation, ext);

    auto reference = [&](const char* published) {
        return published_inputs ? std::string("computed; published figure ") + published : kComputed;
    };

    std::vector<ReportRow> rows{
        {"initial_weekly_deaths", cmp.ease.initial_weekly_deaths, "deaths/week",
         input_note(cmp.ease == defaults.comparison.ease)},
        {"ease_weekly_factor", cmp.ease.weekly_factor, "per week", input_note(cmp.ease == defaults.comparison.ease)},
        {"lockdown_weekly_factor", cmp.lock.weekly_factor, "per week",
         input_note(cmp.lock == defaults.comparison.lock)},
        {"horizon_weeks", std::int64_t{cmp.ease.horizon_weeks}, "weeks",
         input_note(cmp.ease == defaults.comparison.ease)},
        {"ease_cumulative_deaths", q.ease_deaths, "deaths", reference("about 300000")},
        {"lockdown_cumulative_deaths", q.lock_deaths, "deaths", reference("about 17500")},
        {"excess_deaths", q.excess_deaths, "deaths", reference("about 282500")},
        {"qalys_per_death", q.qalys_per_death, "QALY/death",
         cmp.include_illness || cmp.include_aftereffects
             ? std::string("computed from illness and after-effect parameters")
             : input_note(config.valuation.qalys_per_death == defaults.valuation.qalys_per_death)},
        {"qaly_cost", q.qaly_cost, "QALY", kComputed},
        {"pounds_per_qaly", config.valuation.pounds_per_qaly, "GBP/QALY",
         input_note(config.valuation.pounds_per_qaly == defaults.valuation.pounds_per_qaly)},
        {"monetized_qaly_cost", q.monetized_cost, "GBP",
         published_inputs && config.valuation.pounds_per_qaly == 30000.0 ? reference("GBP 84bn") : kComputed},
        {"lockdown_quarter_cost", q.lockdown_cost, "GBP",
         input_note(cmp.lockdown_quarter_cost == defaults.comparison.lockdown_quarter_cost)},
        {"cost_ratio", q.monetized_cost / q.lockdown_cost, "ratio", kComputed},
        {"verdict", std::string(q.ease ? "ease" : "lockdown"), "", kComputed},
    };
    return key_value_table("Quarterly lockdown comparison", rows);
}

Table consistency_table(const RunConfig& config) {
    const auto witnesses = find_inconsistency(config.consistency);
    Table t;
    t.title = fmt::format("Inconsistency witnesses ({} found)", witnesses.size());
    t.columns = {"lockdown_factor", "easing_factor", "horizon_weeks", "lockdown_cost_per_week",
                 "cost_per_death", "initial_weekly_deaths", "final_week_lhs", "final_week_rhs",
                 "block_lhs", "block_rhs", "weekly_verdicts", "block_verdict"};
    for (const auto& w : witnesses) {
        std::string weekly;
        for (bool e : w.weekly_verdicts) weekly += e ? 'E' : 'L';
        t.rows.push_back({w.model.lockdown_factor, w.model.easing_factor,
                          std::int64_t{w.model.horizon_weeks}, w.model.lockdown_cost_per_week,
                          w.model.cost_per_death, w.model.initial_weekly_deaths, w.final_week.lhs,
                          w.final_week.rhs, w.block.lhs, w.block.rhs, weekly,
                          std::string(w.block_verdict ? "ease" : "lockdown")});
    }
    return t;
}

Table endstate_table(const RunConfig& config) {
    const EndStateModel model = config.end_state_model();
    MonteCarloOptions mc;
    mc.samples = config.samples;
    mc.seed = config.seed;

    Table t;
    t.title = fmt::format("End-state valuations ({}-week horizon, {} samples, seed {})",
                          model.horizon_weeks, config.samples, config.seed);
    t.columns = {"label", "weekly_deaths", "weekly_factor", "cumulative_infected_fraction",
                 "expected_future_deaths", "standard_error", "expected_future_qalys", "monetized_gbp",
                 "monetized_bn", "difference_vs_first_gbp", "difference_vs_first_bn",
                 "susceptible_credit_gbp", "samples"};
    const auto& states = config.option_value.end_states;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        std::vector<Cell> row{s.label, s.weekly_deaths, s.weekly_factor_under_policy,
                              s.cumulative_infected_fraction};
        EndStateComparison cmp;
        if (i == 0) {
            cmp.b = mc_end_state_value(s, model, config.valuation, mc);
        } else {
            cmp = end_state_value_difference(states[0], s, model, config.valuation, mc);
        }
        const auto& v = cmp.b;
        row.insert(row.end(), {v.expected_future_deaths, v.standard_error, v.expected_future_qalys,
                               whole_pounds(v.monetized), billions(v.monetized),
                               whole_pounds(cmp.difference), billions(cmp.difference),
                               whole_pounds(cmp.susceptible_credit), v.samples});
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table finalsize_table(const RunConfig& config) {
    Table t;
    t.title = "SIR final size and overshoot";
    t.columns = {"r0", "initial_susceptible_fraction", "herd_threshold", "attack_rate", "overshoot",
                 "residual", "iterations"};
    for (double r0 : config.finalsize_r0_values) {
        SirParams p = config.epidemic;
        p.r0 = r0;
        const auto fs = final_size(p);
        t.rows.push_back({r0, p.initial_susceptible_fraction, fs.herd_threshold, fs.attack_rate,
                          fs.overshoot, fs.residual, std::int64_t{fs.iterations}});
    }
    return t;
}

Table sweep_table(const RunConfig& config) {
    Table t;
    t.title = "Quarterly comparison sweep over " + config.sweep.parameter;
    t.columns = {"parameter", "value", "excess_deaths", "qalys_per_death", "qaly_cost",
                 "monetized_cost_gbp", "monetized_cost_bn", "lockdown_cost_gbp", "lockdown_cost_bn",
                 "verdict"};
    const auto& param = config.sweep.parameter;
    for (double value : config.sweep.values) {
        ComparisonConfig cmp = config.comparison;
        QalyValuation v = config.valuation;
        if (param == "pounds_per_qaly") v.pounds_per_qaly = value;
        else if (param == "qalys_per_death") v.qalys_per_death = value;
        else if (param == "lockdown_quarter_cost") cmp.lockdown_quarter_cost = value;
        else if (param == "ease_factor") cmp.ease.weekly_factor = value;
        else if (param == "lock_factor") cmp.lock.weekly_factor = value;
        else throw DomainError("unknown sweep parameter '" + param + "'");

        ComparisonExtensions ext;
        ext.include_illness = cmp.include_illness;
        ext.include_aftereffects = cmp.include_aftereffects;
        ext.illness = config.effective_illness();
        ext.aftereffects = config.aftereffects;
        const auto q = quarterly_comparison(cmp.ease, cmp.lock, cmp.lockdown_quarter_cost, v, ext);
        t.rows.push_back({param, value, q.excess_deaths, q.qalys_per_death, q.qaly_cost,
                          whole_pounds(q.monetized_cost), billions(q.monetized_cost),
                          whole_pounds(q.lockdown_cost), billions(q.lockdown_cost),
                          std::string(q.ease ? "ease" : "lockdown")});
    }
    return t;
}

namespace {

std::string render(const Table& t, OutputFormat format, Subcommand command) {
    switch (format) {
        case OutputFormat::csv: return render_csv(t);
        case OutputFormat::table: return render_text(t);
        case OutputFormat::svg: break;
    }
    std::vector<std::size_t> series;
    switch (command) {
        case Subcommand::project: {
            Table chart = t;
            chart.rows.pop_back();  // drop the totals row
            for (std::size_t i = 1; i < chart.columns.size(); ++i) series.push_back(i);
            return render_svg(chart, 0, series, "deaths per week");
        }
        case Subcommand::sweep:
            return render_svg(t, 1, {6, 8}, "GBP bn");
        case Subcommand::finalsize:
            return render_svg(t, 0, {2, 3, 4}, "fraction of population");
        case Subcommand::endstate:
            return render_svg(t, 0, {8}, "GBP bn");
        default:
            throw DomainError("svg output is not available for '" + std::string(to_string(command)) + "'");
    }
}

}  // namespace

CommandOutput run_subcommand(const RunConfig& config, Subcommand command, OutputFormat format) {
    CommandOutput out;
    switch (command) {
        case Subcommand::project: out.data = render(project_table(config), format, command); break;
        case Subcommand::compare: out.data = render(compare_table(config), format, command); break;
        case Subcommand::consistency: out.data = render(consistency_table(config), format, command); break;
        case Subcommand::endstate: out.data = render(endstate_table(config), format, command); break;
        case Subcommand::finalsize: out.data = render(finalsize_table(config), format, command); break;
        case Subcommand::sweep: out.data = render(sweep_table(config), format, command); break;
        case Subcommand::paper_check: {
            PaperCheckOptions opts;
            opts.seed = config.seed;
            const auto results = run_paper_check(opts);
            out.data = render(paper_check_table(results), format, command);
            const bool all_pass =
                std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
            out.exit_code = all_pass ? kExitOk : kExitCheckFailed;
            break;
        }
    }
    return out;
}

}  // namespace lockcalc

#include "lockcalc/lockcalc.h"

#include <exception>
#include <new>
#include <string>

#include "lockcalc/commands.hpp"
#include "lockcalc/config.hpp"
#include "lockcalc/decision.hpp"
#include "lockcalc/epidemic.hpp"
#include "lockcalc/errors.hpp"
#include "lockcalc/option_value.hpp"
#include "lockcalc/scenario.hpp"

struct lkc_session {
    lockcalc::RunConfig config;
};

struct lkc_buffer {
    std::string data;
};

namespace {

thread_local std::string last_error;

lkc_status fail(lkc_status status, const char* message) {
    last_error = message;
    return status;
}

// Translates the C++ error hierarchy at the boundary; nothing escapes.
template <class Fn>
lkc_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        fn();
        return LKC_OK;
    } catch (const lockcalc::ConfigUnknownKeyError& e) {
        return fail(LKC_ERR_CONFIG_UNKNOWN_KEY, e.what());
    } catch (const lockcalc::ConfigValidationError& e) {
        return fail(LKC_ERR_CONFIG_VALIDATION, e.what());
    } catch (const lockcalc::ConfigError& e) {
        return fail(LKC_ERR_CONFIG_PARSE, e.what());
    } catch (const lockcalc::DomainError& e) {
        return fail(LKC_ERR_DOMAIN, e.what());
    } catch (const lockcalc::NumericError& e) {
        return fail(LKC_ERR_NUMERIC, e.what());
    } catch (const lockcalc::SolverError& e) {
        return fail(LKC_ERR_SOLVER, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LKC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LKC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LKC_ERR_INTERNAL, "unknown error");
    }
}

lockcalc::OutputFormat to_format(lkc_format f) {
    switch (f) {
        case LKC_FORMAT_CSV: return lockcalc::OutputFormat::csv;
        case LKC_FORMAT_TABLE: return lockcalc::OutputFormat::table;
        case LKC_FORMAT_SVG: return lockcalc::OutputFormat::svg;
    }
    throw lockcalc::DomainError("unknown output format");
}

lockcalc::DecisionModel to_model(const lkc_decision_model& m) {
    lockcalc::DecisionModel d;
    d.lockdown_cost_per_week = m.lockdown_cost_per_week;
    d.cost_per_death = m.cost_per_death;
    d.initial_weekly_deaths = m.initial_weekly_deaths;
    d.lockdown_factor = m.lockdown_factor;
    d.easing_factor = m.easing_factor;
    d.horizon_weeks = m.horizon_weeks;
    return d;
}

lockcalc::GeometricScenario to_scenario(double d, double f, int n) {
    lockcalc::GeometricScenario s;
    s.initial_weekly_deaths = d;
    s.weekly_factor = f;
    s.horizon_weeks = n;
    return s;
}

}  // namespace

extern "C" {

const char* lkc_version(void) { return "0.1.0"; }

const char* lkc_status_string(lkc_status status) {
    switch (status) {
        case LKC_OK: return "ok";
        case LKC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LKC_ERR_DOMAIN: return "domain error";
        case LKC_ERR_NUMERIC: return "numeric error";
        case LKC_ERR_SOLVER: return "solver error";
        case LKC_ERR_CONFIG_PARSE: return "config parse error";
        case LKC_ERR_CONFIG_VALIDATION: return "config validation error";
        case LKC_ERR_CONFIG_UNKNOWN_KEY: return "config unknown key";
        case LKC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lkc_last_error_message(void) { return last_error.c_str(); }

lkc_status lkc_session_create_default(lkc_session** out) {
    if (!out) return fail(LKC_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] { *out = new lkc_session{lockcalc::default_config()}; });
}

lkc_status lkc_session_create_from_file(const char* path, lkc_session** out) {
    if (!path || !out) return fail(LKC_ERR_INVALID_ARGUMENT, "path or out is null");
    return guarded([&] { *out = new lkc_session{lockcalc::load_config(path)}; });
}

lkc_status lkc_session_create_from_json(const char* json_text, lkc_session** out) {
    if (!json_text || !out) return fail(LKC_ERR_INVALID_ARGUMENT, "json_text or out is null");
    return guarded([&] { *out = new lkc_session{lockcalc::parse_config(json_text)}; });
}

void lkc_session_destroy(lkc_session* session) { delete session; }

lkc_status lkc_session_set_seed(lkc_session* session, uint64_t seed) {
    if (!session) return fail(LKC_ERR_INVALID_ARGUMENT, "session is null");
    session->config.seed = seed;
    return LKC_OK;
}

lkc_status lkc_session_set_samples(lkc_session* session, int64_t samples) {
    if (!session) return fail(LKC_ERR_INVALID_ARGUMENT, "session is null");
    if (samples < 1) return fail(LKC_ERR_DOMAIN, "samples must be >= 1");
    session->config.samples = samples;
    return LKC_OK;
}

lkc_status lkc_session_format(const lkc_session* session, lkc_format* out) {
    if (!session || !out) return fail(LKC_ERR_INVALID_ARGUMENT, "session or out is null");
    switch (session->config.format) {
        case lockcalc::OutputFormat::csv: *out = LKC_FORMAT_CSV; break;
        case lockcalc::OutputFormat::table: *out = LKC_FORMAT_TABLE; break;
        case lockcalc::OutputFormat::svg: *out = LKC_FORMAT_SVG; break;
    }
    return LKC_OK;
}

lkc_status lkc_session_to_json(const lkc_session* session, lkc_buffer** out) {
    if (!session || !out) return fail(LKC_ERR_INVALID_ARGUMENT, "session or out is null");
    return guarded([&] { *out = new lkc_buffer{lockcalc::serialize_config(session->config)}; });
}

lkc_status lkc_parse_format(const char* name, lkc_format* out) {
    if (!name || !out) return fail(LKC_ERR_INVALID_ARGUMENT, "name or out is null");
    const auto f = lockcalc::parse_output_format(name);
    if (!f) return fail(LKC_ERR_INVALID_ARGUMENT, "format must be csv, table or svg");
    *out = *f == lockcalc::OutputFormat::csv ? LKC_FORMAT_CSV
         : *f == lockcalc::OutputFormat::svg ? LKC_FORMAT_SVG
                                             : LKC_FORMAT_TABLE;
    return LKC_OK;
}

lkc_status lkc_run(const lkc_session* session, const char* subcommand, lkc_format format, lkc_buffer** out,
                   int* exit_code) {
    if (!session || !subcommand || !out) return fail(LKC_ERR_INVALID_ARGUMENT, "null argument");
    const auto command = lockcalc::parse_subcommand(subcommand);
    if (!command) return fail(LKC_ERR_INVALID_ARGUMENT, "unknown subcommand");
    if (format != LKC_FORMAT_CSV && format != LKC_FORMAT_TABLE && format != LKC_FORMAT_SVG)
        return fail(LKC_ERR_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        auto result = lockcalc::run_subcommand(session->config, *command, to_format(format));
        *out = new lkc_buffer{std::move(result.data)};
        if (exit_code) *exit_code = result.exit_code;
    });
}

const char* lkc_buffer_data(const lkc_buffer* buffer) { return buffer ? buffer->data.c_str() : ""; }
size_t lkc_buffer_size(const lkc_buffer* buffer) { return buffer ? buffer->data.size() : 0; }
void lkc_buffer_destroy(lkc_buffer* buffer) { delete buffer; }

lkc_status lkc_weekly_deaths(double initial_weekly_deaths, double weekly_factor, int horizon_weeks, int week,
                             double* out) {
    if (!out) return fail(LKC_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        *out = lockcalc::weekly_deaths(to_scenario(initial_weekly_deaths, weekly_factor, horizon_weeks), week);
    });
}

lkc_status lkc_cumulative_deaths(double initial_weekly_deaths, double weekly_factor, int horizon_weeks,
                                 double* out) {
    if (!out) return fail(LKC_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        *out = lockcalc::cumulative_deaths(to_scenario(initial_weekly_deaths, weekly_factor, horizon_weeks));
    });
}

lkc_status lkc_herd_immunity_threshold(double r0, double* out) {
    if (!out) return fail(LKC_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        lockcalc::SirParams p;
        p.r0 = r0;
        *out = lockcalc::herd_immunity_threshold(p);
    });
}

lkc_status lkc_final_size_solve(double r0, double initial_susceptible_fraction, lkc_final_size* out) {
    if (!out) return fail(LKC_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        lockcalc::SirParams p;
        p.r0 = r0;
        p.initial_susceptible_fraction = initial_susceptible_fraction;
        const auto fs = lockcalc::final_size(p);
        *out = lkc_final_size{fs.attack_rate, fs.herd_threshold, fs.overshoot, fs.residual, fs.iterations};
    });
}

lkc_status lkc_weekly_easing_condition(const lkc_decision_model* model, int week, int* ease, double* lhs,
                                       double* rhs) {
    if (!model || !ease) return fail(LKC_ERR_INVALID_ARGUMENT, "model or ease is null");
    return guarded([&] {
        const auto v = lockcalc::weekly_easing_condition(to_model(*model), week);
        *ease = v.ease ? 1 : 0;
        if (lhs) *lhs = v.lhs;
        if (rhs) *rhs = v.rhs;
    });
}

lkc_status lkc_block_easing_condition(const lkc_decision_model* model, int* ease, double* lhs, double* rhs) {
    if (!model || !ease) return fail(LKC_ERR_INVALID_ARGUMENT, "model or ease is null");
    return guarded([&] {
        const auto v = lockcalc::block_easing_condition(to_model(*model));
        *ease = v.ease ? 1 : 0;
        if (lhs) *lhs = v.lhs;
        if (rhs) *rhs = v.rhs;
    });
}

lkc_status lkc_mortality_multiplier(double multiplier_per_discovery, int discoveries, double* out) {
    if (!out) return fail(LKC_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        lockcalc::TreatmentDiscoveryModel t;
        t.mortality_multiplier_per_discovery = multiplier_per_discovery;
        t.validate();
        *out = lockcalc::mortality_multiplier(t, discoveries);
    });
}

}  // extern "C"

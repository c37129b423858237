#include "lockcalc/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lockcalc/errors.hpp"

namespace lockcalc {

using nlohmann::json;

std::optional<OutputFormat> parse_output_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "table") return OutputFormat::table;
    if (s == "svg") return OutputFormat::svg;
    return std::nullopt;
}

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return "csv";
        case OutputFormat::table: return "table";
        case OutputFormat::svg: return "svg";
    }
    return "table";
}

EndStateModel RunConfig::end_state_model() const {
    EndStateModel m;
    m.horizon_weeks = option_value.horizon_weeks;
    m.treatment = option_value.treatment;
    m.vaccine = option_value.vaccine;
    m.ifr = option_value.ifr;
    if (option_value.cap_enabled) {
        SirParams cap = epidemic;
        cap.initial_susceptible_fraction = 1.0;
        m.cap = cap;
    }
    return m;
}

IllnessCostParams RunConfig::effective_illness() const {
    return derive_bout_cost ? illness.with_derived_bout_cost() : illness;
}

namespace {

constexpr double kReferenceDeathsBeforeWindow = 40000.0;
constexpr double kDefaultPopulation = 6.7e7;

GeometricScenario make_scenario(std::string label, double d, double f, int n) {
    GeometricScenario s;
    s.label = std::move(label);
    s.initial_weekly_deaths = d;
    s.weekly_factor = f;
    s.horizon_weeks = n;
    return s;
}

// End state reached after running `s`: its last weekly rate, its trend, and
// the infections implied by prior plus scenario deaths.
EndState end_state_after(const GeometricScenario& s, double ifr, double population,
                         int weeks_since_start, std::string label) {
    EndState e;
    e.label = std::move(label);
    e.weekly_deaths = weekly_deaths(s, s.horizon_weeks);
    e.weekly_factor_under_policy = s.weekly_factor;
    e.cumulative_infected_fraction =
        (kReferenceDeathsBeforeWindow + cumulative_deaths(s)) / ifr / population;
    e.weeks_since_pandemic_start = weeks_since_start;
    return e;
}

}  // namespace

RunConfig default_config() {
    RunConfig c;
    c.scenarios = {
        make_scenario("lockdown", 1230.0, 0.7, 13),
        make_scenario("ease_0.9", 1230.0, 0.9, 13),
        make_scenario("ease_1.0", 1230.0, 1.0, 13),
        make_scenario("ease_1.15", 1230.0, 1.15, 13),
    };

    // Toy decision model at the L = C M witness point; C is the cost of a
    // death at 10 QALYs and 30000 GBP per QALY.
    c.decision.cost_per_death = c.valuation.qalys_per_death * c.valuation.pounds_per_qaly;
    c.decision.initial_weekly_deaths = 7572.0;
    c.decision.lockdown_cost_per_week = c.decision.cost_per_death * c.decision.initial_weekly_deaths;
    c.decision.lockdown_factor = 0.5;
    c.decision.easing_factor = 1.05;
    c.decision.horizon_weeks = 12;

    c.consistency.lockdown_factor = {0.1, 0.9, 9};
    c.consistency.easing_factor = {1.01, 1.2, 20};
    c.consistency.min_horizon = 1;
    c.consistency.max_horizon = 20;
    c.consistency.cost_ratio = {1.0, 1.0, 1};

    c.comparison.ease = make_scenario("mid_september_ease", 7572.0, 1.15, 13);
    c.comparison.lock = make_scenario("mid_september_lockdown", 7572.0, 0.7, 13);

    c.epidemic.r0 = 2.0;
    c.epidemic.initial_susceptible_fraction = 1.0;
    c.epidemic.population = kDefaultPopulation;

    const double ifr = c.option_value.ifr;
    c.option_value.end_states = {
        end_state_after(c.scenarios[0], ifr, kDefaultPopulation, 26, "suppression"),
        end_state_after(c.scenarios[3], ifr, kDefaultPopulation, 26, "raging"),
    };

    c.finalsize_r0_values = {0.8, 1.5, 2.0, 2.5, 3.0};
    return c;
}

namespace {

std::string type_name(const json& j) { return j.type_name(); }

// Reads one JSON object, remembering which keys were consumed so leftovers
// can be rejected.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object())
            throw ConfigValidationError(path_.empty() ? "<root>" : path_,
                                        "expected object, got " + type_name(j_));
    }

    std::string field(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    const json* find(std::string_view key) {
        seen_.insert(std::string(key));
        auto it = j_.find(std::string(key));
        return it == j_.end() ? nullptr : &*it;
    }

    void number(std::string_view key, double& out) {
        if (const json* v = find(key)) {
            if (!v->is_number()) throw ConfigValidationError(field(key), "expected number, got " + type_name(*v));
            out = v->get<double>();
        }
    }

    void integer(std::string_view key, int& out) {
        if (const json* v = find(key)) {
            if (!v->is_number_integer())
                throw ConfigValidationError(field(key), "expected integer, got " + type_name(*v));
            const auto x = v->get<std::int64_t>();
            if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
                throw ConfigValidationError(field(key), "integer out of range");
            out = static_cast<int>(x);
        }
    }

    void boolean(std::string_view key, bool& out) {
        if (const json* v = find(key)) {
            if (!v->is_boolean()) throw ConfigValidationError(field(key), "expected boolean, got " + type_name(*v));
            out = v->get<bool>();
        }
    }

    void string(std::string_view key, std::string& out) {
        if (const json* v = find(key)) {
            if (!v->is_string()) throw ConfigValidationError(field(key), "expected string, got " + type_name(*v));
            out = v->get<std::string>();
        }
    }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) throw ConfigUnknownKeyError(field(it.key()));
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

template <class Fn>
void validated(const std::string& field, Fn&& fn) {
    try {
        fn();
    } catch (const DomainError& e) {
        throw ConfigValidationError(field, e.what());
    }
}

GeometricScenario read_scenario(const json& j, const std::string& path, GeometricScenario s) {
    ObjectReader r(j, path);
    r.string("label", s.label);
    r.number("initial_weekly_deaths", s.initial_weekly_deaths);
    r.number("weekly_factor", s.weekly_factor);
    r.integer("horizon_weeks", s.horizon_weeks);
    r.finish();
    if (!(s.initial_weekly_deaths > 0.0) || !std::isfinite(s.initial_weekly_deaths))
        throw ConfigValidationError(r.field("initial_weekly_deaths"), "must be > 0");
    if (!(s.weekly_factor > 0.0) || !std::isfinite(s.weekly_factor))
        throw ConfigValidationError(r.field("weekly_factor"), "must be > 0");
    if (s.horizon_weeks < 1) throw ConfigValidationError(r.field("horizon_weeks"), "must be >= 1");
    return s;
}

void read_axis(ObjectReader& parent, std::string_view key, GridAxis& axis) {
    if (const json* v = parent.find(key)) {
        ObjectReader r(*v, parent.field(key));
        r.number("min", axis.min);
        r.number("max", axis.max);
        r.integer("steps", axis.steps);
        r.finish();
    }
}

// A comparison side is either the label of a declared scenario or an inline
// scenario object.
GeometricScenario read_scenario_ref(const json& j, const std::string& path,
                                    const std::vector<GeometricScenario>& scenarios,
                                    const GeometricScenario& fallback) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        for (const auto& s : scenarios)
            if (s.label == name) return s;
        throw ConfigValidationError(path, "scenario '" + name + "' is not defined");
    }
    return read_scenario(j, path, fallback);
}

void parse_valuation(ObjectReader& root, RunConfig& c) {
    const json* v = root.find("valuation");
    if (!v) return;
    ObjectReader r(*v, "valuation");
    std::string preset;
    r.string("preset", preset);
    const bool explicit_pounds = r.find("pounds_per_qaly") != nullptr;
    r.number("pounds_per_qaly", c.valuation.pounds_per_qaly);
    r.number("qalys_per_death", c.valuation.qalys_per_death);
    r.finish();
    if (!preset.empty()) {
        const auto p = find_valuation_preset(preset);
        if (!p) throw ConfigValidationError("valuation.preset", "unknown preset '" + preset + "'");
        if (explicit_pounds && c.valuation.pounds_per_qaly != p->pounds_per_qaly)
            throw ConfigValidationError("valuation.pounds_per_qaly", "conflicts with preset '" + preset + "'");
        c.valuation.pounds_per_qaly = p->pounds_per_qaly;
    }
    validated("valuation", [&] { c.valuation.validate(); });
}

void parse_option_value(ObjectReader& root, RunConfig& c) {
    const json* v = root.find("option_value");
    if (!v) return;
    auto& o = c.option_value;
    ObjectReader r(*v, "option_value");
    r.integer("horizon_weeks", o.horizon_weeks);
    r.number("ifr", o.ifr);
    r.boolean("cap_enabled", o.cap_enabled);

    if (const json* t = r.find("treatment")) {
        ObjectReader tr(*t, "option_value.treatment");
        std::string mode;
        tr.string("mode", mode);
        if (!mode.empty()) {
            if (mode == "deterministic_quarterly") o.treatment.mode = DiscoveryMode::deterministic_quarterly;
            else if (mode == "poisson") o.treatment.mode = DiscoveryMode::poisson;
            else throw ConfigValidationError("option_value.treatment.mode", "unknown mode '" + mode + "'");
        }
        tr.number("discovery_interval_weeks", o.treatment.discovery_interval_weeks);
        tr.number("mortality_multiplier_per_discovery", o.treatment.mortality_multiplier_per_discovery);
        tr.number("poisson_rate_per_week", o.treatment.poisson_rate_per_week);
        tr.finish();
        validated("option_value.treatment", [&] { o.treatment.validate(); });
    }
    if (const json* vac = r.find("vaccine")) {
        ObjectReader vr(*vac, "option_value.vaccine");
        vr.number("per_quarter_arrival_probability", o.vaccine.per_quarter_arrival_probability);
        std::string effect;
        vr.string("effect", effect);
        if (!effect.empty()) {
            if (effect == "ends_epidemic") o.vaccine.effect = VaccineEffect::ends_epidemic;
            else if (effect == "transmission_multiplier") o.vaccine.effect = VaccineEffect::transmission_multiplier;
            else throw ConfigValidationError("option_value.vaccine.effect", "unknown effect '" + effect + "'");
        }
        vr.number("transmission_multiplier_value", o.vaccine.transmission_multiplier_value);
        vr.finish();
        validated("option_value.vaccine", [&] { o.vaccine.validate(); });
    }
    if (const json* es = r.find("end_states")) {
        if (!es->is_array() || es->empty())
            throw ConfigValidationError("option_value.end_states", "expected non-empty array");
        o.end_states.clear();
        for (std::size_t i = 0; i < es->size(); ++i) {
            const std::string path = "option_value.end_states[" + std::to_string(i) + "]";
            ObjectReader er((*es)[i], path);
            EndState e;
            er.string("label", e.label);
            er.number("weekly_deaths", e.weekly_deaths);
            er.number("weekly_factor_under_policy", e.weekly_factor_under_policy);
            er.number("cumulative_infected_fraction", e.cumulative_infected_fraction);
            er.integer("weeks_since_pandemic_start", e.weeks_since_pandemic_start);
            er.finish();
            if (e.label.empty()) e.label = "state_" + std::to_string(i);
            validated(path, [&] { e.validate(); });
            o.end_states.push_back(std::move(e));
        }
    }
    r.finish();
    if (o.horizon_weeks < 1) throw ConfigValidationError("option_value.horizon_weeks", "must be >= 1");
    if (!(o.ifr > 0.0 && o.ifr < 1.0)) throw ConfigValidationError("option_value.ifr", "must be in (0, 1)");
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigParseError(std::string("malformed JSON: ") + e.what());
    }

    RunConfig c = default_config();
    ObjectReader r(root, "");

    if (const json* s = r.find("scenarios")) {
        if (!s->is_array() || s->empty())
            throw ConfigValidationError("scenarios", "expected non-empty array");
        c.scenarios.clear();
        std::set<std::string> labels;
        for (std::size_t i = 0; i < s->size(); ++i) {
            const std::string path = "scenarios[" + std::to_string(i) + "]";
            GeometricScenario sc = read_scenario((*s)[i], path, GeometricScenario{});
            if (sc.label.empty()) sc.label = "scenario_" + std::to_string(i);
            if (!labels.insert(sc.label).second)
                throw ConfigValidationError(path + ".label", "duplicate label '" + sc.label + "'");
            c.scenarios.push_back(std::move(sc));
        }
    }

    parse_valuation(r, c);

    if (const json* v = r.find("illness")) {
        ObjectReader ir(*v, "illness");
        auto& p = c.illness;
        ir.number("qaly_per_bout", p.qaly_per_bout);
        ir.number("bouts_per_death", p.bouts_per_death);
        ir.number("flu_baseline_qaly", p.flu_baseline_qaly);
        ir.number("severity_multiplier", p.severity_multiplier);
        ir.number("duration_multiplier", p.duration_multiplier);
        ir.number("implied_mortality_rate", p.implied_mortality_rate);
        ir.boolean("derive_bout_cost", c.derive_bout_cost);
        ir.finish();
        validated("illness", [&] { p.validate(); });
    }

    if (const json* v = r.find("aftereffects")) {
        ObjectReader ar(*v, "aftereffects");
        auto& p = c.aftereffects;
        ar.number("prevalence_among_patients", p.prevalence_among_patients);
        ar.number("quality_decrement", p.quality_decrement);
        ar.number("decrement_duration_years", p.decrement_duration_years);
        ar.number("life_expectancy_loss_years", p.life_expectancy_loss_years);
        ar.number("mortality_rate", p.mortality_rate);
        ar.finish();
        validated("aftereffects", [&] { p.validate(); });
    }

    if (const json* v = r.find("hospitalization")) {
        ObjectReader hr(*v, "hospitalization");
        auto& p = c.hospitalization;
        hr.number("hospitalized_count", p.hospitalized_count);
        hr.number("reference_deaths", p.reference_deaths);
        hr.number("mean_stay_days", p.mean_stay_days);
        hr.number("quality_during_stay", p.quality_during_stay);
        hr.finish();
        validated("hospitalization", [&] { p.validate(); });
    }

    if (const json* v = r.find("decision")) {
        ObjectReader dr(*v, "decision");
        auto& m = c.decision;
        dr.number("lockdown_cost_per_week", m.lockdown_cost_per_week);
        dr.number("cost_per_death", m.cost_per_death);
        dr.number("initial_weekly_deaths", m.initial_weekly_deaths);
        dr.number("lockdown_factor", m.lockdown_factor);
        dr.number("easing_factor", m.easing_factor);
        dr.integer("horizon_weeks", m.horizon_weeks);
        dr.finish();
        validated("decision", [&] { m.validate(); });
    }

    if (const json* v = r.find("consistency")) {
        ObjectReader cr(*v, "consistency");
        auto& b = c.consistency;
        read_axis(cr, "lockdown_factor", b.lockdown_factor);
        read_axis(cr, "easing_factor", b.easing_factor);
        read_axis(cr, "cost_ratio", b.cost_ratio);
        if (const json* h = cr.find("horizon_weeks")) {
            ObjectReader hr(*h, "consistency.horizon_weeks");
            hr.integer("min", b.min_horizon);
            hr.integer("max", b.max_horizon);
            hr.finish();
        }
        cr.number("cost_per_death", b.cost_per_death);
        cr.number("initial_weekly_deaths", b.initial_weekly_deaths);
        cr.finish();
        validated("consistency", [&] { b.validate(); });
    }

    if (const json* v = r.find("comparison")) {
        ObjectReader cr(*v, "comparison");
        auto& cmp = c.comparison;
        if (const json* e = cr.find("ease"))
            cmp.ease = read_scenario_ref(*e, "comparison.ease", c.scenarios, cmp.ease);
        if (const json* l = cr.find("lock"))
            cmp.lock = read_scenario_ref(*l, "comparison.lock", c.scenarios, cmp.lock);
        cr.number("lockdown_quarter_cost", cmp.lockdown_quarter_cost);
        cr.boolean("include_illness", cmp.include_illness);
        cr.boolean("include_aftereffects", cmp.include_aftereffects);
        cr.finish();
        if (!(cmp.lockdown_quarter_cost > 0.0))
            throw ConfigValidationError("comparison.lockdown_quarter_cost", "must be > 0");
        if (cmp.ease.horizon_weeks != cmp.lock.horizon_weeks)
            throw ConfigValidationError("comparison", "ease and lock scenarios must share horizon_weeks");
        if (cmp.ease.initial_weekly_deaths != cmp.lock.initial_weekly_deaths)
            throw ConfigValidationError("comparison", "ease and lock scenarios must share initial_weekly_deaths");
    }

    if (const json* v = r.find("epidemic")) {
        ObjectReader er(*v, "epidemic");
        er.number("r0", c.epidemic.r0);
        er.number("initial_susceptible_fraction", c.epidemic.initial_susceptible_fraction);
        if (const json* p = er.find("population")) {
            if (p->is_null()) c.epidemic.population.reset();
            else if (!p->is_number()) throw ConfigValidationError("epidemic.population", "expected number");
            else c.epidemic.population = p->get<double>();
        }
        er.finish();
        validated("epidemic", [&] { c.epidemic.validate(); });
    }

    parse_option_value(r, c);
    if (c.option_value.cap_enabled && !c.epidemic.population)
        throw ConfigValidationError("option_value.cap_enabled", "requires epidemic.population");

    if (const json* v = r.find("finalsize")) {
        ObjectReader fr(*v, "finalsize");
        if (const json* list = fr.find("r0_values")) {
            if (!list->is_array() || list->empty())
                throw ConfigValidationError("finalsize.r0_values", "expected non-empty array");
            c.finalsize_r0_values.clear();
            for (const auto& x : *list) {
                if (!x.is_number() || !(x.get<double>() > 0.0))
                    throw ConfigValidationError("finalsize.r0_values", "entries must be numbers > 0");
                c.finalsize_r0_values.push_back(x.get<double>());
            }
        }
        fr.finish();
    }

    if (const json* v = r.find("sweep")) {
        ObjectReader sr(*v, "sweep");
        sr.string("parameter", c.sweep.parameter);
        if (const json* list = sr.find("values")) {
            if (!list->is_array() || list->empty())
                throw ConfigValidationError("sweep.values", "expected non-empty array");
            c.sweep.values.clear();
            for (const auto& x : *list) {
                if (!x.is_number()) throw ConfigValidationError("sweep.values", "entries must be numbers");
                c.sweep.values.push_back(x.get<double>());
            }
        }
        sr.finish();
        bool known = false;
        for (auto p : kSweepParameters) known = known || p == c.sweep.parameter;
        if (!known) throw ConfigValidationError("sweep.parameter", "unknown parameter '" + c.sweep.parameter + "'");
    }

    if (const json* v = r.find("seed")) {
        if (!v->is_number_unsigned()) throw ConfigValidationError("seed", "expected unsigned 64-bit integer");
        c.seed = v->get<std::uint64_t>();
    }
    if (const json* v = r.find("samples")) {
        if (!v->is_number_integer() || v->get<std::int64_t>() < 1)
            throw ConfigValidationError("samples", "expected integer >= 1");
        c.samples = v->get<std::int64_t>();
    }
    {
        std::string fmt;
        r.string("format", fmt);
        if (!fmt.empty()) {
            auto f = parse_output_format(fmt);
            if (!f) throw ConfigValidationError("format", "expected csv, table or svg");
            c.format = *f;
        }
    }
    r.finish();
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigParseError("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

json scenario_json(const GeometricScenario& s) {
    return {{"label", s.label},
            {"initial_weekly_deaths", s.initial_weekly_deaths},
            {"weekly_factor", s.weekly_factor},
            {"horizon_weeks", s.horizon_weeks}};
}

json axis_json(const GridAxis& a) { return {{"min", a.min}, {"max", a.max}, {"steps", a.steps}}; }

}  // namespace

std::string serialize_config(const RunConfig& c) {
    json j;
    j["scenarios"] = json::array();
    for (const auto& s : c.scenarios) j["scenarios"].push_back(scenario_json(s));
    j["valuation"] = {{"pounds_per_qaly", c.valuation.pounds_per_qaly},
                      {"qalys_per_death", c.valuation.qalys_per_death}};
    j["illness"] = {{"qaly_per_bout", c.illness.qaly_per_bout},
                    {"bouts_per_death", c.illness.bouts_per_death},
                    {"flu_baseline_qaly", c.illness.flu_baseline_qaly},
                    {"severity_multiplier", c.illness.severity_multiplier},
                    {"duration_multiplier", c.illness.duration_multiplier},
                    {"implied_mortality_rate", c.illness.implied_mortality_rate},
                    {"derive_bout_cost", c.derive_bout_cost}};
    j["aftereffects"] = {{"prevalence_among_patients", c.aftereffects.prevalence_among_patients},
                         {"quality_decrement", c.aftereffects.quality_decrement},
                         {"decrement_duration_years", c.aftereffects.decrement_duration_years},
                         {"life_expectancy_loss_years", c.aftereffects.life_expectancy_loss_years},
                         {"mortality_rate", c.aftereffects.mortality_rate}};
    j["hospitalization"] = {{"hospitalized_count", c.hospitalization.hospitalized_count},
                            {"reference_deaths", c.hospitalization.reference_deaths},
                            {"mean_stay_days", c.hospitalization.mean_stay_days},
                            {"quality_during_stay", c.hospitalization.quality_during_stay}};
    j["decision"] = {{"lockdown_cost_per_week", c.decision.lockdown_cost_per_week},
                     {"cost_per_death", c.decision.cost_per_death},
                     {"initial_weekly_deaths", c.decision.initial_weekly_deaths},
                     {"lockdown_factor", c.decision.lockdown_factor},
                     {"easing_factor", c.decision.easing_factor},
                     {"horizon_weeks", c.decision.horizon_weeks}};
    j["consistency"] = {{"lockdown_factor", axis_json(c.consistency.lockdown_factor)},
                        {"easing_factor", axis_json(c.consistency.easing_factor)},
                        {"cost_ratio", axis_json(c.consistency.cost_ratio)},
                        {"horizon_weeks", {{"min", c.consistency.min_horizon}, {"max", c.consistency.max_horizon}}},
                        {"cost_per_death", c.consistency.cost_per_death},
                        {"initial_weekly_deaths", c.consistency.initial_weekly_deaths}};
    j["comparison"] = {{"ease", scenario_json(c.comparison.ease)},
                       {"lock", scenario_json(c.comparison.lock)},
                       {"lockdown_quarter_cost", c.comparison.lockdown_quarter_cost},
                       {"include_illness", c.comparison.include_illness},
                       {"include_aftereffects", c.comparison.include_aftereffects}};
    json states = json::array();
    for (const auto& e : c.option_value.end_states)
        states.push_back({{"label", e.label},
                          {"weekly_deaths", e.weekly_deaths},
                          {"weekly_factor_under_policy", e.weekly_factor_under_policy},
                          {"cumulative_infected_fraction", e.cumulative_infected_fraction},
                          {"weeks_since_pandemic_start", e.weeks_since_pandemic_start}});
    const auto& o = c.option_value;
    j["option_value"] = {
        {"horizon_weeks", o.horizon_weeks},
        {"ifr", o.ifr},
        {"cap_enabled", o.cap_enabled},
        {"treatment",
         {{"mode", o.treatment.mode == DiscoveryMode::poisson ? "poisson" : "deterministic_quarterly"},
          {"discovery_interval_weeks", o.treatment.discovery_interval_weeks},
          {"mortality_multiplier_per_discovery", o.treatment.mortality_multiplier_per_discovery},
          {"poisson_rate_per_week", o.treatment.poisson_rate_per_week}}},
        {"vaccine",
         {{"per_quarter_arrival_probability", o.vaccine.per_quarter_arrival_probability},
          {"effect", o.vaccine.effect == VaccineEffect::ends_epidemic ? "ends_epidemic" : "transmission_multiplier"},
          {"transmission_multiplier_value", o.vaccine.transmission_multiplier_value}}},
        {"end_states", states}};
    j["epidemic"] = {{"r0", c.epidemic.r0},
                     {"initial_susceptible_fraction", c.epidemic.initial_susceptible_fraction}};
    j["epidemic"]["population"] = c.epidemic.population ? json(*c.epidemic.population) : json(nullptr);
    j["finalsize"] = {{"r0_values", c.finalsize_r0_values}};
    j["sweep"] = {{"parameter", c.sweep.parameter}, {"values", c.sweep.values}};
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["format"] = std::string(to_string(c.format));
    return j.dump(2) + "\n";
}

}  // namespace lockcalc

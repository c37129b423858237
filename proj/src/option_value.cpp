#include "lockcalc/option_value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "lockcalc/errors.hpp"
#include "lockcalc/scenario.hpp"

namespace lockcalc {

void TreatmentDiscoveryModel::validate() const {
    if (!(mortality_multiplier_per_discovery > 0.0 && mortality_multiplier_per_discovery <= 1.0))
        throw DomainError("mortality_multiplier_per_discovery must be in (0, 1]");
    if (!(discovery_interval_weeks > 0.0) || !std::isfinite(discovery_interval_weeks))
        throw DomainError("discovery_interval_weeks must be > 0");
    if (!(poisson_rate_per_week >= 0.0) || !std::isfinite(poisson_rate_per_week))
        throw DomainError("poisson_rate_per_week must be >= 0");
}

int TreatmentDiscoveryModel::scheduled_discoveries_by_week(int week) const {
    if (week <= 1) return 0;
    // Discoveries land at k * interval and act from the following week.
    return static_cast<int>(std::floor((week - 1) / discovery_interval_weeks + 1e-12));
}

double mortality_multiplier(const TreatmentDiscoveryModel& t, int discoveries) {
    if (discoveries < 0) throw DomainError("discovery count must be >= 0");
    return std::pow(t.mortality_multiplier_per_discovery, discoveries);
}

void VaccineModel::validate() const {
    if (!(per_quarter_arrival_probability >= 0.0 && per_quarter_arrival_probability <= 1.0))
        throw DomainError("per_quarter_arrival_probability must be in [0, 1]");
    if (effect == VaccineEffect::transmission_multiplier &&
        !(transmission_multiplier_value > 0.0 && transmission_multiplier_value <= 1.0))
        throw DomainError("transmission_multiplier_value must be in (0, 1]");
}

void EndState::validate() const {
    const std::string where = label.empty() ? "end state" : "end state '" + label + "'";
    if (!(weekly_deaths >= 0.0) || !std::isfinite(weekly_deaths))
        throw DomainError(where + ": weekly_deaths must be >= 0");
    if (!(weekly_factor_under_policy > 0.0) || !std::isfinite(weekly_factor_under_policy))
        throw DomainError(where + ": weekly_factor_under_policy must be > 0");
    if (!(cumulative_infected_fraction >= 0.0 && cumulative_infected_fraction < 1.0))
        throw DomainError(where + ": cumulative_infected_fraction must be in [0, 1)");
    if (weeks_since_pandemic_start < 0)
        throw DomainError(where + ": weeks_since_pandemic_start must be >= 0");
}

void EndStateModel::validate() const {
    if (horizon_weeks < 1) throw DomainError("horizon_weeks must be >= 1");
    treatment.validate();
    vaccine.validate();
    if (!(ifr > 0.0 && ifr < 1.0)) throw DomainError("ifr must be in (0, 1)");
    if (cap) {
        cap->validate();
        if (!cap->population) throw DomainError("cap requires a population");
    }
}

namespace rng {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + index * 0x9e3779b97f4a7c15ULL);
}

}  // namespace rng

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double future_death_ceiling(const EndState& state, const std::optional<SirParams>& cap, double ifr) {
    if (!cap) return std::numeric_limits<double>::infinity();
    if (!cap->population) throw DomainError("cap requires a population");
    SirParams remaining = *cap;
    remaining.initial_susceptible_fraction = 1.0 - state.cumulative_infected_fraction;
    return final_size(remaining).attack_rate * *cap->population * ifr;
}

namespace {

double capped_path_deaths(const EndState& state, const EndStateModel& model,
                          std::span<const double> discovery_times, int vaccine_quarter,
                          double ceiling) {
    const int vaccine_week = vaccine_quarter > 0 ? vaccine_quarter * kWeeksPerQuarter
                                                 : std::numeric_limits<int>::max();
    const bool vaccine_ends = model.vaccine.effect == VaccineEffect::ends_epidemic;
    const double f = state.weekly_factor_under_policy;
    const double f_after = f * model.vaccine.transmission_multiplier_value;

    std::vector<double> weekly(static_cast<std::size_t>(model.horizon_weeks), 0.0);
    for (int n = 1; n <= model.horizon_weeks; ++n) {
        const bool vaccinated = n > vaccine_week;
        if (vaccinated && vaccine_ends) break;
        double rate = state.weekly_deaths * std::pow(f, std::min(n, vaccine_week));
        if (vaccinated) rate *= std::pow(f_after, n - vaccine_week);

        const double absolute_week = state.weeks_since_pandemic_start + n;
        const auto landed = std::upper_bound(discovery_times.begin(), discovery_times.end(),
                                             absolute_week - 1.0) -
                            discovery_times.begin();
        weekly[static_cast<std::size_t>(n - 1)] =
            rate * mortality_multiplier(model.treatment, static_cast<int>(landed));
    }
    return cap_series(weekly, ceiling).cumulative_deaths;
}

std::vector<double> scheduled_discovery_times(const TreatmentDiscoveryModel& t, double last_week) {
    std::vector<double> times;
    for (int k = 1;; ++k) {
        const double at = k * t.discovery_interval_weeks;
        if (at > last_week) break;
        times.push_back(at);
    }
    return times;
}

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

double path_future_deaths(const EndState& state, const EndStateModel& model,
                          std::span<const double> discovery_times, int vaccine_quarter) {
    return capped_path_deaths(state, model, discovery_times, vaccine_quarter,
                              future_death_ceiling(state, model.cap, model.ifr));
}

double project_future_deaths(const EndState& state, int horizon_weeks,
                             const TreatmentDiscoveryModel& t,
                             const std::optional<SirParams>& cap, double ifr) {
    if (t.mode != DiscoveryMode::deterministic_quarterly)
        throw DomainError("project_future_deaths requires deterministic discovery mode");
    EndStateModel model;
    model.horizon_weeks = horizon_weeks;
    model.treatment = t;
    model.cap = cap;
    model.ifr = ifr;
    model.validate();
    state.validate();
    const auto times = scheduled_discovery_times(
        t, static_cast<double>(state.weeks_since_pandemic_start + horizon_weeks));
    return path_future_deaths(state, model, times, 0);
}

EndStateValuation mc_end_state_value(const EndState& state, const EndStateModel& model,
                                     const QalyValuation& v, const MonteCarloOptions& mc) {
    if (mc.samples < 1) throw DomainError("n_samples must be >= 1");
    state.validate();
    model.validate();
    v.validate();

    const double last_week = static_cast<double>(state.weeks_since_pandemic_start + model.horizon_weeks);
    const int quarters = (model.horizon_weeks + kWeeksPerQuarter - 1) / kWeeksPerQuarter;
    const bool poisson = model.treatment.mode == DiscoveryMode::poisson;
    const double rate = model.treatment.poisson_rate_per_week;
    const double p_vaccine = model.vaccine.per_quarter_arrival_probability;
    const std::vector<double> fixed_times =
        poisson ? std::vector<double>{} : scheduled_discovery_times(model.treatment, last_week);

    const double ceiling = future_death_ceiling(state, model.cap, model.ifr);
    const auto n = static_cast<std::size_t>(mc.samples);
    std::vector<double> deaths(n);

    // Each sample owns its generator, so a sample's path depends only on
    // (seed, index) and never on scheduling.
    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<double> times;
        for (std::size_t i = begin; i < end; ++i) {
            std::mt19937_64 gen(rng::substream_seed(mc.seed, i));
            int vaccine_quarter = 0;
            for (int q = 1; q <= quarters; ++q) {
                const double u = uniform01(gen);
                if (vaccine_quarter == 0 && u < p_vaccine) vaccine_quarter = q;
            }
            std::span<const double> path_times = fixed_times;
            if (poisson) {
                times.clear();
                if (rate > 0.0) {
                    double t = 0.0;
                    for (;;) {
                        t += -std::log1p(-uniform01(gen)) / rate;
                        if (t > last_week) break;
                        times.push_back(t);
                    }
                }
                path_times = times;
            }
            deaths[i] = capped_path_deaths(state, model, path_times, vaccine_quarter, ceiling);
        }
    };

    unsigned threads = mc.threads ? mc.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        run_range(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned k = 0; k < threads; ++k) {
            const std::size_t b = k * chunk;
            const std::size_t e = std::min(n, b + chunk);
            if (b >= e) break;
            pool.emplace_back(run_range, b, e);
        }
        for (auto& th : pool) th.join();
    }

    // Shifted-data moments: exact zero variance when every sample matches.
    const double pivot = deaths[0];
    std::vector<double> dev(n), dev_sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        dev[i] = deaths[i] - pivot;
        dev_sq[i] = dev[i] * dev[i];
    }
    const double sum_dev = pairwise_sum(dev);
    const double sum_dev_sq = pairwise_sum(dev_sq);
    const double count = static_cast<double>(n);

    EndStateValuation out;
    out.samples = mc.samples;
    out.expected_future_deaths = pivot + sum_dev / count;
    if (n > 1) {
        const double var = std::max(0.0, (sum_dev_sq - sum_dev * sum_dev / count) / (count - 1.0));
        out.standard_error = std::sqrt(var / count);
    }
    out.expected_future_qalys = death_qaly_cost(out.expected_future_deaths, v);
    out.monetized = monetize(out.expected_future_qalys, v);
    return out;
}

EndStateComparison end_state_value_difference(const EndState& a, const EndState& b,
                                              const EndStateModel& model,
                                              const QalyValuation& v,
                                              const MonteCarloOptions& mc) {
    if (a.weeks_since_pandemic_start != b.weeks_since_pandemic_start)
        throw DomainError("end states must share weeks_since_pandemic_start to be compared");
    EndStateComparison out;
    out.a = mc_end_state_value(a, model, v, mc);
    out.b = mc_end_state_value(b, model, v, mc);
    out.difference = out.b.monetized - out.a.monetized;
    if (model.cap) {
        const double extra_attack = remaining_susceptible_advantage(
            a.cumulative_infected_fraction, b.cumulative_infected_fraction, *model.cap);
        const double deaths = extra_attack * *model.cap->population * model.ifr;
        out.susceptible_credit = deaths * v.qalys_per_death * v.pounds_per_qaly;
    }
    return out;
}

}  // namespace lockcalc

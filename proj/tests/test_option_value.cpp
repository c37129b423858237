#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "lockcalc/errors.hpp"
#include "lockcalc/option_value.hpp"
#include "lockcalc/scenario.hpp"

using namespace lockcalc;

namespace {

EndState state(double d, double f, int clock, double infected = 0.0) {
    EndState s;
    s.weekly_deaths = d;
    s.weekly_factor_under_policy = f;
    s.weeks_since_pandemic_start = clock;
    s.cumulative_infected_fraction = infected;
    return s;
}

TreatmentDiscoveryModel no_treatments() {
    TreatmentDiscoveryModel t;
    t.mortality_multiplier_per_discovery = 1.0;
    return t;
}

MonteCarloOptions mc(std::int64_t samples, std::uint64_t seed = 99, unsigned threads = 1) {
    MonteCarloOptions o;
    o.samples = samples;
    o.seed = seed;
    o.threads = threads;
    return o;
}

// Oracle for one path with quarterly discoveries and a given vaccine arrival
// quarter (0 = never), written directly from the model description.
double oracle_path(const EndState& s, const EndStateModel& m, int vaccine_quarter) {
    double total = 0.0;
    for (int n = 1; n <= m.horizon_weeks; ++n) {
        const int vaccine_week = vaccine_quarter ? 13 * vaccine_quarter : 1 << 30;
        double rate;
        if (n > vaccine_week) {
            if (m.vaccine.effect == VaccineEffect::ends_epidemic) break;
            rate = s.weekly_deaths * std::pow(s.weekly_factor_under_policy, vaccine_week) *
                   std::pow(s.weekly_factor_under_policy * m.vaccine.transmission_multiplier_value, n - vaccine_week);
        } else {
            rate = s.weekly_deaths * std::pow(s.weekly_factor_under_policy, n);
        }
        const int week = s.weeks_since_pandemic_start + n;
        int discoveries = 0;
        for (int k = 1; k * m.treatment.discovery_interval_weeks <= week - 1; ++k) ++discoveries;
        total += rate * std::pow(m.treatment.mortality_multiplier_per_discovery, discoveries);
    }
    return total;
}

// Exhaustive enumeration over vaccine arrival quarters.
double enumerate_expectation(const EndState& s, const EndStateModel& m) {
    const double p = m.vaccine.per_quarter_arrival_probability;
    const int quarters = (m.horizon_weeks + 12) / 13;
    double expected = 0.0, none = 1.0;
    for (int q = 1; q <= quarters; ++q) {
        expected += none * p * oracle_path(s, m, q);
        none *= 1.0 - p;
    }
    return expected + none * oracle_path(s, m, 0);
}

}  // namespace

TEST_CASE("mortality multiplier") {
    TreatmentDiscoveryModel t;
    CHECK(mortality_multiplier(t, 0) == 1.0);
    CHECK(mortality_multiplier(t, 1) == doctest::Approx(0.92).epsilon(1e-14));
    CHECK(mortality_multiplier(t, 2) == doctest::Approx(0.8464).epsilon(1e-14));
    CHECK(mortality_multiplier(t, 3) == doctest::Approx(0.778688).epsilon(1e-14));
    t.mortality_multiplier_per_discovery = 0.5;
    CHECK(mortality_multiplier(t, 4) == 0.0625);
    CHECK_THROWS_AS(mortality_multiplier(t, -1), DomainError);
}

TEST_CASE("scheduled discoveries act from the week after they land") {
    TreatmentDiscoveryModel t;
    CHECK(t.scheduled_discoveries_by_week(13) == 0);
    CHECK(t.scheduled_discoveries_by_week(14) == 1);
    CHECK(t.scheduled_discoveries_by_week(27) == 2);
    CHECK(t.scheduled_discoveries_by_week(39) == 2);
    CHECK(t.scheduled_discoveries_by_week(40) == 3);
}

TEST_CASE("project_future_deaths reduces to the geometric model") {
    const auto s = state(7572, 1.15, 0);
    GeometricScenario g;
    g.initial_weekly_deaths = 7572;
    g.weekly_factor = 1.15;
    g.horizon_weeks = 13;
    CHECK(project_future_deaths(s, 13, no_treatments(), std::nullopt, 0.006) ==
          doctest::Approx(cumulative_deaths(g)).epsilon(1e-12));
}

TEST_CASE("two prior discoveries scale the whole quarter") {
    // Window covers weeks 27..39: exactly two discoveries apply throughout.
    const double deaths = project_future_deaths(state(7572, 0.7, 26), 13, TreatmentDiscoveryModel{}, std::nullopt, 0.006);
    CHECK(deaths == doctest::Approx(0.8464 * 17496.8164964129124).epsilon(1e-12));
    CHECK(deaths == doctest::Approx(14809.30548256388905).epsilon(1e-12));
}

TEST_CASE("a binding cap leaves only the residual") {
    SirParams cap;
    cap.r0 = 2.0;
    cap.population = 1000.0;
    const double ceiling = 0.796812130020020046 * 1000.0 * 0.006;
    CHECK(future_death_ceiling(state(7572, 1.15, 26), cap, 0.006) == doctest::Approx(ceiling).epsilon(1e-12));
    CHECK(project_future_deaths(state(7572, 1.15, 26), 13, no_treatments(), cap, 0.006) ==
          doctest::Approx(ceiling).epsilon(1e-12));
    SirParams no_population;
    CHECK_THROWS_AS(project_future_deaths(state(10, 1.1, 0), 13, no_treatments(), no_population, 0.006), DomainError);
}

TEST_CASE("project_future_deaths needs deterministic discoveries") {
    TreatmentDiscoveryModel t;
    t.mode = DiscoveryMode::poisson;
    CHECK_THROWS_AS(project_future_deaths(state(10, 1.1, 0), 13, t, std::nullopt, 0.006), DomainError);
}

TEST_CASE("degenerate Monte Carlo equals the projection with zero error") {
    EndStateModel m;
    m.horizon_weeks = 39;
    const auto s = state(7572, 0.9, 26);
    const auto v = mc_end_state_value(s, m, QalyValuation{}, mc(500));
    const double projected = project_future_deaths(s, 39, m.treatment, std::nullopt, m.ifr);
    CHECK(v.expected_future_deaths == projected);
    CHECK(v.standard_error == 0.0);
    CHECK(v.samples == 500);
    CHECK(v.expected_future_qalys == v.expected_future_deaths * 10.0);
    CHECK(v.monetized == v.expected_future_qalys * 30000.0);
}

TEST_CASE("certain vaccine ends deaths after the first quarter") {
    EndStateModel m;
    m.horizon_weeks = 39;
    m.treatment = no_treatments();
    m.vaccine.per_quarter_arrival_probability = 1.0;
    const auto s = state(1000, 1.1, 0);
    GeometricScenario first_quarter;
    first_quarter.initial_weekly_deaths = 1000;
    first_quarter.weekly_factor = 1.1;
    first_quarter.horizon_weeks = 13;
    const auto v = mc_end_state_value(s, m, QalyValuation{}, mc(200));
    CHECK(v.expected_future_deaths == doctest::Approx(cumulative_deaths(first_quarter)).epsilon(1e-12));
    CHECK(v.standard_error == 0.0);
}

TEST_CASE("two-quarter vaccine expectation: Q1 + (1 - p) Q2") {
    EndStateModel m;
    m.horizon_weeks = 26;
    m.treatment = no_treatments();
    m.vaccine.per_quarter_arrival_probability = 0.4;
    const auto s = state(500, 1.08, 13);
    double q1 = 0.0, q2 = 0.0;
    for (int n = 1; n <= 26; ++n) (n <= 13 ? q1 : q2) += 500.0 * std::pow(1.08, n);
    const double expected = q1 + 0.6 * q2;
    const auto v = mc_end_state_value(s, m, QalyValuation{}, mc(100000, 2024));
    CHECK(v.standard_error > 0.0);
    CHECK(std::abs(v.expected_future_deaths - expected) <= 3.0 * v.standard_error);
}

TEST_CASE("Monte Carlo matches exhaustive enumeration up to three quarters") {
    for (int quarters = 1; quarters <= 3; ++quarters) {
        for (auto effect : {VaccineEffect::ends_epidemic, VaccineEffect::transmission_multiplier}) {
            EndStateModel m;
            m.horizon_weeks = 13 * quarters;
            m.vaccine.per_quarter_arrival_probability = 0.25;
            m.vaccine.effect = effect;
            m.vaccine.transmission_multiplier_value = 0.6;
            const auto s = state(2000, 1.12, 20);
            const double oracle = enumerate_expectation(s, m);
            const auto v = mc_end_state_value(s, m, QalyValuation{}, mc(50000, 7 + quarters));
            CAPTURE(quarters);
            if (quarters == 1) {
                // Arrival in the last quarter never acts inside the window.
                CHECK(v.standard_error == 0.0);
                CHECK(v.expected_future_deaths == doctest::Approx(oracle).epsilon(1e-12));
            } else {
                CHECK(std::abs(v.expected_future_deaths - oracle) <= 3.0 * v.standard_error);
            }
        }
    }
}

TEST_CASE("Poisson discoveries match the closed-form generating function") {
    // E[m^N(t)] = exp(-rate t (1 - m)) for a Poisson count N(t).
    EndStateModel m;
    m.horizon_weeks = 26;
    m.treatment.mode = DiscoveryMode::poisson;
    m.treatment.poisson_rate_per_week = 0.2;
    m.treatment.mortality_multiplier_per_discovery = 0.7;
    const auto s = state(1000, 1.05, 10);
    double oracle = 0.0;
    for (int n = 1; n <= 26; ++n) {
        const double t = s.weeks_since_pandemic_start + n - 1;
        oracle += 1000.0 * std::pow(1.05, n) * std::exp(-0.2 * t * (1.0 - 0.7));
    }
    const auto v = mc_end_state_value(s, m, QalyValuation{}, mc(100000, 31));
    CHECK(v.standard_error > 0.0);
    CHECK(std::abs(v.expected_future_deaths - oracle) <= 3.0 * v.standard_error);
}

TEST_CASE("zero Poisson rate is degenerate") {
    EndStateModel m;
    m.treatment.mode = DiscoveryMode::poisson;
    m.treatment.poisson_rate_per_week = 0.0;
    const auto v = mc_end_state_value(state(100, 1.1, 0), m, QalyValuation{}, mc(100));
    CHECK(v.standard_error == 0.0);
}

TEST_CASE("identical seeds give identical results regardless of threads") {
    EndStateModel m;
    m.treatment.mode = DiscoveryMode::poisson;
    m.vaccine.per_quarter_arrival_probability = 0.2;
    SirParams cap;
    cap.r0 = 2.5;
    cap.population = 6.7e7;
    m.cap = cap;
    const auto s = state(7572, 1.15, 26, 0.2);
    const auto a = mc_end_state_value(s, m, QalyValuation{}, mc(20000, 5, 1));
    const auto b = mc_end_state_value(s, m, QalyValuation{}, mc(20000, 5, 1));
    const auto c = mc_end_state_value(s, m, QalyValuation{}, mc(20000, 5, 4));
    CHECK(a.expected_future_deaths == b.expected_future_deaths);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.expected_future_deaths == c.expected_future_deaths);
    CHECK(a.standard_error == c.standard_error);
    const auto other = mc_end_state_value(s, m, QalyValuation{}, mc(20000, 6, 1));
    CHECK(other.expected_future_deaths != a.expected_future_deaths);
}

TEST_CASE("monotonicity under common random numbers") {
    EndStateModel m;
    m.horizon_weeks = 39;
    m.treatment.mode = DiscoveryMode::poisson;
    const auto s = state(1500, 1.1, 26);
    double previous = INFINITY;
    for (double p : {0.0, 0.1, 0.3, 0.6, 1.0}) {
        m.vaccine.per_quarter_arrival_probability = p;
        const double d = mc_end_state_value(s, m, QalyValuation{}, mc(5000, 77)).expected_future_deaths;
        CHECK(d <= previous);
        previous = d;
    }
    m.vaccine.per_quarter_arrival_probability = 0.3;
    previous = -1.0;
    for (double d0 : {10.0, 100.0, 1000.0, 7572.0}) {
        const double d = mc_end_state_value(state(d0, 1.1, 26), m, QalyValuation{}, mc(5000, 77)).expected_future_deaths;
        CHECK(d >= previous);
        previous = d;
    }
}

TEST_CASE("sample count must be positive") {
    CHECK_THROWS_AS(mc_end_state_value(state(1, 1, 0), EndStateModel{}, QalyValuation{}, mc(0)), DomainError);
}

TEST_CASE("end-state value difference") {
    EndStateModel m;
    m.horizon_weeks = 13;
    const QalyValuation v;
    const auto suppression = state(13, 0.7, 26, 0.1);
    const auto raging = state(7572, 1.15, 26, 0.1);

    CHECK(end_state_value_difference(raging, raging, m, v, mc(10)).difference == 0.0);

    const auto cmp = end_state_value_difference(suppression, raging, m, v, mc(10));
    CHECK(cmp.difference > 0.0);
    const double expected = (project_future_deaths(raging, 13, m.treatment, std::nullopt, m.ifr) -
                             project_future_deaths(suppression, 13, m.treatment, std::nullopt, m.ifr)) *
                            10.0 * 30000.0;
    CHECK(cmp.difference == doctest::Approx(expected).epsilon(1e-12));
    CHECK(cmp.susceptible_credit == 0.0);

    // Pessimistic limit: no treatments or vaccine, same immunity, and a long
    // horizon so both states exhaust the same susceptible pool.
    EndStateModel pessimistic;
    pessimistic.horizon_weeks = 156;
    pessimistic.treatment = no_treatments();
    SirParams cap;
    cap.r0 = 2.0;
    cap.population = 6.7e7;
    pessimistic.cap = cap;
    const auto slow = state(13, 1.15, 26, 0.1);
    const auto fast = state(7572, 1.15, 26, 0.1);
    const auto limit = end_state_value_difference(slow, fast, pessimistic, v, mc(10));
    CHECK(limit.a.expected_future_deaths > 0.0);
    CHECK(std::abs(limit.difference) <= 1e-9 * limit.b.monetized);

    // More infections out of the way earn a credit.
    const auto credited = end_state_value_difference(state(13, 1.15, 26, 0.1), state(7572, 1.15, 26, 0.2),
                                                     pessimistic, v, mc(10));
    CHECK(credited.susceptible_credit > 0.0);
    CHECK(credited.difference < 0.0);

    CHECK_THROWS_AS(end_state_value_difference(state(13, 0.7, 26), state(13, 0.7, 27), m, v, mc(10)), DomainError);
}

TEST_CASE("pairwise sum") {
    std::vector<double> values(1000, 0.1);
    CHECK(pairwise_sum(values) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("substreams differ per index") {
    CHECK(rng::substream_seed(1, 0) != rng::substream_seed(1, 1));
    CHECK(rng::substream_seed(1, 0) != rng::substream_seed(2, 0));
    CHECK(rng::substream_seed(42, 17) == rng::substream_seed(42, 17));
}

TEST_CASE("model validation") {
    EndStateModel m;
    m.ifr = 0.0;
    CHECK_THROWS_AS(m.validate(), DomainError);
    TreatmentDiscoveryModel t;
    t.mortality_multiplier_per_discovery = 1.5;
    CHECK_THROWS_AS(t.validate(), DomainError);
    VaccineModel vac;
    vac.per_quarter_arrival_probability = 1.2;
    CHECK_THROWS_AS(vac.validate(), DomainError);
    EndState bad = state(1, 1, 0, 1.0);
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

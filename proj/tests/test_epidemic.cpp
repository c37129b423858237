#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lockcalc/epidemic.hpp"
#include "lockcalc/errors.hpp"

using namespace lockcalc;

namespace {

SirParams sir(double r0, double s0 = 1.0) {
    SirParams p;
    p.r0 = r0;
    p.initial_susceptible_fraction = s0;
    return p;
}

// Oracle: plain fixed-point iteration a <- s0 (1 - exp(-r0 a)) from a = s0,
// which converges monotonically to the nontrivial root when r0 s0 > 1.
double iterate_final_size(double r0, double s0) {
    double a = s0;
    for (int i = 0; i < 100000; ++i) {
        const double next = s0 * (1.0 - std::exp(-r0 * a));
        if (std::abs(next - a) < 1e-15) return next;
        a = next;
    }
    return a;
}

}  // namespace

TEST_CASE("herd immunity threshold") {
    CHECK(herd_immunity_threshold(sir(2.0)) == 0.5);
    CHECK(herd_immunity_threshold(sir(1.0)) == 0.0);
    CHECK(herd_immunity_threshold(sir(0.5)) == 0.0);
    CHECK(herd_immunity_threshold(sir(1.5)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(herd_immunity_threshold(sir(0.0)), DomainError);
}

TEST_CASE("final size matches frozen high-precision roots") {
    // Frozen from a 30-digit root solve.
    const auto two = final_size(sir(2.0));
    CHECK(two.attack_rate == doctest::Approx(0.796812130020020046).epsilon(1e-12));
    CHECK(two.overshoot == doctest::Approx(0.296812130020020046).epsilon(1e-11));
    CHECK(std::abs(two.residual) < kFinalSizeTolerance);

    const auto one_half = final_size(sir(1.5));
    CHECK(one_half.attack_rate == doctest::Approx(0.582811643865811386).epsilon(1e-12));
    CHECK(one_half.overshoot == doctest::Approx(0.249478310532478053).epsilon(1e-11));

    CHECK(final_size(sir(3.0)).attack_rate == doctest::Approx(0.940479790707359631).epsilon(1e-12));
    CHECK(final_size(sir(2.0, 0.7)).attack_rate == doctest::Approx(0.357707825181412958).epsilon(1e-12));
}

TEST_CASE("final size agrees with fixed-point iteration") {
    for (double r0 : {1.2, 1.8, 2.5, 4.0, 8.0})
        for (double s0 : {1.0, 0.9, 0.7})
            if (r0 * s0 > 1.05)
                CHECK(final_size(sir(r0, s0)).attack_rate ==
                      doctest::Approx(iterate_final_size(r0, s0)).epsilon(1e-10));
}

TEST_CASE("subcritical epidemics do not spread") {
    const auto fs = final_size(sir(0.8));
    CHECK(fs.attack_rate == 0.0);
    CHECK(fs.overshoot == 0.0);
    CHECK(fs.residual == 0.0);
    CHECK(final_size(sir(1.0)).attack_rate == 0.0);
    CHECK(final_size(sir(2.0, 0.5)).attack_rate == 0.0);
}

TEST_CASE("near-critical r0 still finds the small positive root") {
    const auto fs = final_size(sir(1.0 + 1e-6));
    CHECK(fs.attack_rate > 0.0);
    CHECK(fs.attack_rate < 1e-5);
    CHECK(std::abs(fs.residual) < kFinalSizeTolerance);
}

TEST_CASE("property: fixed point, overshoot and monotonicity") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> r(1.0 + 1e-9, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double r0 = r(gen);
        const auto fs = final_size(sir(r0));
        CHECK(std::abs(fs.attack_rate - (1.0 - std::exp(-r0 * fs.attack_rate))) < 1e-10);
        CHECK(fs.overshoot > 0.0);
        CHECK(fs.herd_threshold <= fs.attack_rate);
        CHECK(fs.attack_rate <= 1.0);
        CHECK(final_size(sir(r0 * 1.01)).attack_rate > fs.attack_rate);
    }
    CHECK(final_size(sir(1.0001)).overshoot < 1e-3);
}

TEST_CASE("future attack grows with the susceptible fraction") {
    double prev = 0.0;
    for (double s0 = 0.55; s0 <= 1.0; s0 += 0.05) {
        const double a = final_size(sir(2.5, s0)).attack_rate;
        CHECK(a > prev);
        prev = a;
    }
}

TEST_CASE("remaining susceptible advantage") {
    CHECK(remaining_susceptible_advantage(0.2, 0.2, sir(2.0)) == 0.0);
    const double adv = remaining_susceptible_advantage(0.0, 0.3, sir(2.0));
    CHECK(adv > 0.0);
    CHECK(adv == doctest::Approx(final_size(sir(2.0)).attack_rate - final_size(sir(2.0, 0.7)).attack_rate));
    CHECK(remaining_susceptible_advantage(0.1, 0.4, sir(0.9)) == 0.0);
    CHECK_THROWS_AS(remaining_susceptible_advantage(1.0, 0.3, sir(2.0)), DomainError);
    CHECK_THROWS_AS(remaining_susceptible_advantage(-0.1, 0.3, sir(2.0)), DomainError);
}

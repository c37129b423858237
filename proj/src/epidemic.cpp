#include "lockcalc/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lockcalc/errors.hpp"

namespace lockcalc {

void SirParams::validate() const {
    if (!(r0 > 0.0) || !std::isfinite(r0)) throw DomainError("r0 must be > 0");
    if (!(initial_susceptible_fraction > 0.0 && initial_susceptible_fraction <= 1.0))
        throw DomainError("initial_susceptible_fraction must be in (0, 1]");
    if (population && !(*population > 0.0 && std::isfinite(*population)))
        throw DomainError("population must be > 0");
}

double herd_immunity_threshold(const SirParams& p) {
    p.validate();
    return std::max(0.0, 1.0 - 1.0 / p.r0);
}

FinalSizeResult final_size(const SirParams& p) {
    p.validate();
    const double r0 = p.r0;
    const double s0 = p.initial_susceptible_fraction;

    FinalSizeResult out;
    out.herd_threshold = herd_immunity_threshold(p);

    // g(a) = s0 (1 - e^{-r0 a}) - a. g(0) = 0 always; a positive root exists
    // iff the effective reproduction number r0 * s0 exceeds one.
    auto g = [&](double a) { return -s0 * std::expm1(-r0 * a) - a; };

    double attack = 0.0;
    if (r0 * s0 > 1.0) {
        double lo = 1e-9 * s0;
        double hi = s0;  // g(s0) = -s0 e^{-r0 s0} < 0
        // Near criticality the root can sit below the default lower bracket.
        while (g(lo) <= 0.0 && lo > 1e-300) lo *= 0.5;
        if (!(g(lo) > 0.0)) throw SolverError("final_size: cannot bracket the epidemic root");

        int it = 0;
        double mid = 0.5 * (lo + hi);
        for (; it < kFinalSizeMaxIterations; ++it) {
            mid = 0.5 * (lo + hi);
            const double gm = g(mid);
            if (gm == 0.0 || mid == lo || mid == hi) break;
            if (gm > 0.0) lo = mid;
            else hi = mid;
        }
        attack = mid;
        out.iterations = it;
    }

    out.attack_rate = attack;
    out.residual = g(attack);
    if (!(std::abs(out.residual) < kFinalSizeTolerance))
        throw SolverError("final_size: residual above tolerance after " +
                          std::to_string(out.iterations) + " iterations");
    const double immune_at_end = (1.0 - s0) + attack;
    out.overshoot = std::max(0.0, immune_at_end - out.herd_threshold);
    return out;
}

double remaining_susceptible_advantage(double already_infected_a, double already_infected_b,
                                       const SirParams& p) {
    auto in_range = [](double x) { return x >= 0.0 && x < 1.0; };
    if (!in_range(already_infected_a) || !in_range(already_infected_b))
        throw DomainError("already-infected fractions must be in [0, 1)");
    SirParams pa = p;
    pa.initial_susceptible_fraction = 1.0 - already_infected_a;
    SirParams pb = p;
    pb.initial_susceptible_fraction = 1.0 - already_infected_b;
    return final_size(pa).attack_rate - final_size(pb).attack_rate;
}

}  // namespace lockcalc

// Prints standard-vs-assisted outcome aggregates for a few illustrative rate
// pairs, parameterized by the total rate and the entangling share.
#include <cstdio>

#include "sqec/noise_algebra.hpp"

int main() {
    using namespace sqec;
    const double cases[][2] = {{0.20, 0.20}, {0.20, 0.12}, {0.05, 0.03}, {0.05, 0.01}};

    std::printf("%-18s %-28s %-44s %s\n", "rates", "standard (C/CC/F)",
                "assisted (C/CC/F/R_PT/R_S)", "effective correct std/asst");
    for (const auto& [phat, p] : cases) {
        const double o = solve_environmental(phat, p);
        const OutcomeFractions f = outcome_fractions(make_error_probabilities(o, p));
        const StandardAggregate s = standard_aggregate(f);
        const AssistedAggregate a = assisted_aggregate(f);
        std::printf("phat=%.2f p=%.2f  %.4f %.4f %.4f         %.4f %.4f %.4f %.4f %.4f"
                    "           %.4f / %.4f\n",
                    phat, p, s.correct, s.cancel, s.faulty, a.correct, a.cancel, a.faulty,
                    a.parity_reject, a.sensor_reject, effective_correct(f, CodeMode::Standard),
                    effective_correct(f, CodeMode::Assisted));
    }
    return 0;
}

// Runs the noisy Deutsch-Jozsa benchmark twice on the same error
// realizations, with and without the sensor veto, and prints the resulting
// state histograms.
#include <cstdio>

#include "sqec/experiments.hpp"

int main() {
    using namespace sqec;
    DjConfig config;
    config.seed = 7;

    DjEngine engine(build_dj_circuit());
    config.veto_enabled = true;
    const ExperimentReport with_veto = run_dj_experiment(config, engine);
    config.veto_enabled = false;
    const ExperimentReport without_veto = run_dj_experiment(config, engine);

    std::printf("state   no veto     veto\n");
    for (int s = 0; s < 8; ++s)
        std::printf("|%s|  %8.5f %8.5f\n", index_to_bitstring(s, 3).c_str(),
                    without_veto.fractions()[s], with_veto.fractions()[s]);
    std::printf("\nrejected: %llu of %llu shots\n",
                static_cast<unsigned long long>(with_veto.rejected),
                static_cast<unsigned long long>(config.shots));
    std::printf("correct fraction: %.5f -> %.5f\n", without_veto.correct_fraction(),
                with_veto.correct_fraction());
    return 0;
}

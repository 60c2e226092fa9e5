#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqec/reports.hpp"

namespace sqec {
namespace detail {

// Payload is fully materialized before the output path is opened, so a
// failing run never leaves a partial file behind.
inline int emit(const std::string& payload, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    if (out_path.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open output path: " << out_path << "\n";
        return 1;
    }
    file << payload;
    file.flush();
    if (!file.good()) {
        file.close();
        std::remove(out_path.c_str());
        err << "error: failed while writing: " << out_path << "\n";
        return 1;
    }
    return 0;
}

// Exactly one of --phat or --o, always with --p.
inline ErrorProbabilities resolve_rates(bool has_phat, double phat, bool has_o, double o,
                                        bool has_p, double p) {
    if (!has_p) throw std::domain_error("missing --p");
    if (has_phat && has_o) throw std::domain_error("conflicting parameterizations: give --phat or --o, not both");
    if (!has_phat && !has_o) throw std::domain_error("missing parameterization: give --phat or --o");
    if (has_phat) return make_error_probabilities(solve_environmental(phat, p), p);
    return make_error_probabilities(o, p);
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sensor-assisted fault mitigation: truth tables, outcome-fraction algebra and Monte Carlo benchmarks"};
    app.name("sensorqec");
    app.require_subcommand(1);

    std::string payload;
    std::string out_path;

    // truth-table
    auto* tt = app.add_subcommand("truth-table", "Emit the 64-case classification table");
    std::string tt_format = "csv";
    tt->add_option("--format", tt_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    tt->add_option("--out", out_path, "Write to file instead of stdout");
    tt->callback([&] {
        payload = tt_format == "csv" ? truth_table_csv() : json_payload(truth_table_json());
    });

    // fractions
    auto* fr = app.add_subcommand("fractions", "Analytic outcome fractions for one rate pair");
    double fr_phat = 0.0, fr_o = 0.0, fr_p = 0.0;
    std::string fr_format = "json";
    auto* fr_phat_opt = fr->add_option("--phat", fr_phat, "Total per-qubit error rate");
    auto* fr_o_opt = fr->add_option("--o", fr_o, "Environmental (sensor-detectable) rate");
    auto* fr_p_opt = fr->add_option("--p", fr_p, "Entangling rate");
    fr->add_option("--format", fr_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    fr->add_option("--out", out_path, "Write to file instead of stdout");
    fr->callback([&] {
        const ErrorProbabilities probs =
            detail::resolve_rates(fr_phat_opt->count() > 0, fr_phat, fr_o_opt->count() > 0, fr_o,
                                  fr_p_opt->count() > 0, fr_p);
        if (probs.o > 0.5 || probs.p > 0.5)
            err << "warning: error rate above 0.5 is outside the small-error regime\n";
        payload = fr_format == "csv" ? fractions_report_csv(probs)
                                     : json_payload(fractions_report_json(probs));
    });

    // sweep
    auto* sw = app.add_subcommand("sweep", "Effective-fault grid over rate and entangling share");
    double sw_phat_min = 0.0, sw_phat_max = 0.5, sw_frac_min = 0.0, sw_frac_max = 1.0;
    int sw_steps = 50;
    std::string sw_format = "csv";
    sw->add_option("--phat-min", sw_phat_min, "Low edge of the total-rate axis")->capture_default_str();
    sw->add_option("--phat-max", sw_phat_max, "High edge of the total-rate axis")->capture_default_str();
    sw->add_option("--frac-min", sw_frac_min, "Low edge of the entangling-share axis")->capture_default_str();
    sw->add_option("--frac-max", sw_frac_max, "High edge of the entangling-share axis")->capture_default_str();
    sw->add_option("--steps", sw_steps, "Points per axis")->capture_default_str();
    sw->add_option("--format", sw_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sw->add_option("--out", out_path, "Write to file instead of stdout");
    sw->callback([&] {
        const std::vector<SweepCell> cells =
            sweep_grid(sw_phat_min, sw_phat_max, sw_frac_min, sw_frac_max, sw_steps);
        payload = sw_format == "csv" ? sweep_csv(cells) : json_payload(sweep_json(cells));
    });

    // qec-mc
    auto* mc = app.add_subcommand("qec-mc", "Monte Carlo check of the analytic fractions");
    QecMonteCarloConfig mc_config;
    double mc_phat = 0.0, mc_o = 0.0, mc_p = 0.0;
    std::string mc_format = "json";
    mc->add_option("--shots", mc_config.shots, "Sampled channel passes")->capture_default_str();
    auto* mc_phat_opt = mc->add_option("--phat", mc_phat, "Total per-qubit error rate");
    auto* mc_o_opt = mc->add_option("--o", mc_o, "Environmental (sensor-detectable) rate");
    auto* mc_p_opt = mc->add_option("--p", mc_p, "Entangling rate");
    mc->add_option("--seed", mc_config.seed, "Master RNG seed")->capture_default_str();
    mc->add_option("--sensor-efficiency", mc_config.sensor_efficiency,
                   "Detection probability per environmental error")
        ->capture_default_str();
    mc->add_option("--audit-fraction", mc_config.audit_fraction,
                   "Share of shots re-checked on the statevector simulator")
        ->capture_default_str();
    mc->add_option("--format", mc_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    mc->add_option("--out", out_path, "Write to file instead of stdout");
    mc->callback([&] {
        const ErrorProbabilities probs =
            detail::resolve_rates(mc_phat_opt->count() > 0, mc_phat, mc_o_opt->count() > 0, mc_o,
                                  mc_p_opt->count() > 0, mc_p);
        if (probs.o > 0.5 || probs.p > 0.5)
            err << "warning: error rate above 0.5 is outside the small-error regime\n";
        mc_config.o = probs.o;
        mc_config.p = probs.p;
        const QecMonteCarloReport report = run_qec_montecarlo(mc_config);
        payload = mc_format == "csv" ? qec_mc_report_csv(report)
                                     : json_payload(qec_mc_report_json(report));
    });

    // dj
    auto* dj = app.add_subcommand("dj", "Noisy balanced Deutsch-Jozsa benchmark with sensor veto");
    DjConfig dj_config;
    std::string dj_format = "json";
    std::string dj_circuit_path;
    dj->add_option("--shots", dj_config.shots, "Shots per trial")->capture_default_str();
    dj->add_option("--trials", dj_config.trials, "Independent trials")->capture_default_str();
    dj->add_option("--gate-error", dj_config.gate_error_prob, "Per-site bit-flip probability")
        ->capture_default_str();
    dj->add_option("--detectable", dj_config.detectable_fraction,
                   "Probability a realized error is sensor-detectable")
        ->capture_default_str();
    dj->add_flag("--veto,!--no-veto", dj_config.veto_enabled, "Reject flagged shots");
    dj->add_option("--seed", dj_config.seed, "Master RNG seed")->capture_default_str();
    dj->add_option("--circuit", dj_circuit_path, "Alternative circuit file (GATE/SITE lines)");
    dj->add_option("--format", dj_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    dj->add_option("--out", out_path, "Write to file instead of stdout");
    dj->callback([&] {
        DjCircuit circuit;
        if (dj_circuit_path.empty()) {
            circuit = build_dj_circuit();
        } else {
            std::ifstream file(dj_circuit_path);
            if (!file) throw std::domain_error("cannot open circuit file: " + dj_circuit_path);
            circuit = parse_dj_circuit(file);
        }
        DjEngine engine(std::move(circuit));
        if (dj_config.trials <= 1) {
            const ExperimentReport report = run_dj_experiment(dj_config, engine);
            payload = dj_format == "csv" ? dj_report_csv(report)
                                         : json_payload(dj_report_json(report));
        } else {
            const TrialStatistics stats = run_trials(dj_config, engine);
            payload = dj_format == "csv" ? dj_trials_csv(stats)
                                         : json_payload(dj_trials_json(stats));
        }
    });

    try {
        // CLI11's vector overload consumes arguments back to front.
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return detail::emit(payload, out_path, out, err);
}

}  // namespace sqec

#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqec/experiments.hpp"
#include "sqec/noise_algebra.hpp"
#include "sqec/sensor_qec.hpp"

namespace sqec {

// Insertion-ordered JSON so emitted reports are byte-stable across parse and
// re-dump round trips.
using OrderedJson = nlohmann::ordered_json;

inline std::string json_payload(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

// 17 significant digits: enough to reproduce any double exactly.
inline std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double round_4dp(double v) { return std::round(v * 1e4) / 1e4; }

// ---- truth table ----

inline OrderedJson truth_table_json() {
    OrderedJson rows = OrderedJson::array();
    for (const CaseRecord& rec : enumerate_truth_table()) {
        rows.push_back(OrderedJson{{"env_mask", bits3_to_string(rec.mask.env)},
                                   {"ent_mask", bits3_to_string(rec.mask.ent)},
                                   {"resultant", bits3_to_string(rec.resultant)},
                                   {"syndrome_hex", syndrome_hex(rec.syndrome)},
                                   {"o_exp", rec.env_errors},
                                   {"p_exp", rec.ent_errors},
                                   {"obar_exp", 3 - rec.env_errors},
                                   {"pbar_exp", 3 - rec.ent_errors},
                                   {"standard", to_string(rec.standard)},
                                   {"assisted", to_string(rec.assisted)}});
    }
    return rows;
}

// ---- outcome fractions ----

inline OrderedJson fractions_to_json(const OutcomeFractions& f) {
    return OrderedJson{{"C_C", f.correct_correct},
                       {"CC_CC", f.cancel_cancel},
                       {"F_F", f.faulty_faulty},
                       {"CC_R_PT", f.cancel_parity_reject},
                       {"F_R_PT", f.faulty_parity_reject},
                       {"CC_R_S", f.cancel_sensor_reject},
                       {"F_R_S", f.faulty_sensor_reject}};
}

inline OrderedJson fractions_report_json(const ErrorProbabilities& probs) {
    const OutcomeFractions f = outcome_fractions(probs);
    const StandardAggregate std_agg = standard_aggregate(f);
    const AssistedAggregate ast_agg = assisted_aggregate(f);
    const double eff_std = effective_correct(f, CodeMode::Standard);
    const double eff_ast = effective_correct(f, CodeMode::Assisted);

    OrderedJson doc;
    doc["o"] = probs.o;
    doc["p"] = probs.p;
    doc["phat"] = probs.phat();
    doc["joint_fractions"] = fractions_to_json(f);
    doc["standard"] = OrderedJson{{"C", std_agg.correct}, {"CC", std_agg.cancel}, {"F", std_agg.faulty}};
    doc["assisted"] = OrderedJson{{"C", ast_agg.correct},
                                  {"CC", ast_agg.cancel},
                                  {"F", ast_agg.faulty},
                                  {"R_PT", ast_agg.parity_reject},
                                  {"R_S", ast_agg.sensor_reject}};
    doc["effective_correct"] = OrderedJson{{"standard", eff_std}, {"assisted", eff_ast}};
    doc["effective_fault"] = OrderedJson{{"standard", effective_fault_standard(f)},
                                         {"assisted", effective_fault(f)}};
    doc["rounded_4dp"] = OrderedJson{
        {"standard", OrderedJson{{"C", round_4dp(std_agg.correct)},
                                 {"CC", round_4dp(std_agg.cancel)},
                                 {"F", round_4dp(std_agg.faulty)}}},
        {"assisted", OrderedJson{{"C", round_4dp(ast_agg.correct)},
                                 {"CC", round_4dp(ast_agg.cancel)},
                                 {"F", round_4dp(ast_agg.faulty)},
                                 {"R_PT", round_4dp(ast_agg.parity_reject)},
                                 {"R_S", round_4dp(ast_agg.sensor_reject)}}},
        {"effective_correct",
         OrderedJson{{"standard", round_4dp(eff_std)}, {"assisted", round_4dp(eff_ast)}}}};
    return doc;
}

inline std::string fractions_report_csv(const ErrorProbabilities& probs) {
    const OutcomeFractions f = outcome_fractions(probs);
    const StandardAggregate std_agg = standard_aggregate(f);
    const AssistedAggregate ast_agg = assisted_aggregate(f);
    const double eff_std = effective_correct(f, CodeMode::Standard);
    const double eff_ast = effective_correct(f, CodeMode::Assisted);

    std::ostringstream out;
    out << "o,p,phat,C_C,CC_CC,F_F,CC_R_PT,F_R_PT,CC_R_S,F_R_S,"
           "standard_C,standard_CC,standard_F,"
           "assisted_C,assisted_CC,assisted_F,assisted_R_PT,assisted_R_S,"
           "eff_correct_standard,eff_correct_assisted,eff_fault_standard,eff_fault_assisted,"
           "standard_C_4dp,standard_CC_4dp,standard_F_4dp,"
           "assisted_C_4dp,assisted_CC_4dp,assisted_F_4dp,assisted_R_PT_4dp,assisted_R_S_4dp,"
           "eff_correct_standard_4dp,eff_correct_assisted_4dp\n";
    const double raw[] = {probs.o, probs.p, probs.phat(), f.correct_correct, f.cancel_cancel,
                          f.faulty_faulty, f.cancel_parity_reject, f.faulty_parity_reject,
                          f.cancel_sensor_reject, f.faulty_sensor_reject, std_agg.correct,
                          std_agg.cancel, std_agg.faulty, ast_agg.correct, ast_agg.cancel,
                          ast_agg.faulty, ast_agg.parity_reject, ast_agg.sensor_reject, eff_std,
                          eff_ast, effective_fault_standard(f), effective_fault(f)};
    const double rounded[] = {std_agg.correct, std_agg.cancel,       std_agg.faulty,
                              ast_agg.correct, ast_agg.cancel,       ast_agg.faulty,
                              ast_agg.parity_reject, ast_agg.sensor_reject, eff_std, eff_ast};
    bool first = true;
    for (double v : raw) {
        out << (first ? "" : ",") << format_g17(v);
        first = false;
    }
    for (double v : rounded) out << ',' << format_g17(round_4dp(v));
    out << '\n';
    return out.str();
}

// ---- sweep ----

inline std::string sweep_csv(const std::vector<SweepCell>& cells) {
    std::ostringstream out;
    out << "phat,entangling_fraction,eff_fault_standard,eff_fault_assisted\n";
    for (const SweepCell& cell : cells)
        out << format_g17(cell.phat) << ',' << format_g17(cell.entangling_fraction) << ','
            << format_g17(cell.eff_fault_standard) << ',' << format_g17(cell.eff_fault_assisted)
            << '\n';
    return out.str();
}

inline OrderedJson sweep_json(const std::vector<SweepCell>& cells) {
    OrderedJson rows = OrderedJson::array();
    for (const SweepCell& cell : cells)
        rows.push_back(OrderedJson{{"phat", cell.phat},
                                   {"entangling_fraction", cell.entangling_fraction},
                                   {"eff_fault_standard", cell.eff_fault_standard},
                                   {"eff_fault_assisted", cell.eff_fault_assisted},
                                   {"valid", cell.valid}});
    return OrderedJson{{"cells", rows}};
}

// ---- QEC Monte Carlo ----

namespace detail {
inline double z_score(double empirical, double analytic, double shots) {
    const double var = analytic * (1.0 - analytic) / shots;
    if (var <= 0.0)
        return empirical == analytic ? 0.0 : std::numeric_limits<double>::infinity();
    return (empirical - analytic) / std::sqrt(var);
}
}  // namespace detail

inline OrderedJson qec_mc_report_json(const QecMonteCarloReport& report) {
    const OutcomeFractions emp = report.empirical();
    const OutcomeFractions ana =
        outcome_fractions(make_error_probabilities(report.config.o, report.config.p));
    const double shots = static_cast<double>(report.config.shots);

    OrderedJson doc;
    doc["config"] = OrderedJson{{"shots", report.config.shots},
                                {"o", report.config.o},
                                {"p", report.config.p},
                                {"phat", ErrorProbabilities{report.config.o, report.config.p}.phat()},
                                {"seed", report.config.seed},
                                {"sensor_efficiency", report.config.sensor_efficiency},
                                {"audit_fraction", report.config.audit_fraction}};
    doc["counts"] = OrderedJson{{"C_C", report.counts.correct_correct},
                                {"CC_CC", report.counts.cancel_cancel},
                                {"F_F", report.counts.faulty_faulty},
                                {"CC_R_PT", report.counts.cancel_parity_reject},
                                {"F_R_PT", report.counts.faulty_parity_reject},
                                {"CC_R_S", report.counts.cancel_sensor_reject},
                                {"F_R_S", report.counts.faulty_sensor_reject}};
    doc["empirical"] = fractions_to_json(emp);
    doc["analytic"] = fractions_to_json(ana);
    doc["z_scores"] = OrderedJson{
        {"C_C", detail::z_score(emp.correct_correct, ana.correct_correct, shots)},
        {"CC_CC", detail::z_score(emp.cancel_cancel, ana.cancel_cancel, shots)},
        {"F_F", detail::z_score(emp.faulty_faulty, ana.faulty_faulty, shots)},
        {"CC_R_PT", detail::z_score(emp.cancel_parity_reject, ana.cancel_parity_reject, shots)},
        {"F_R_PT", detail::z_score(emp.faulty_parity_reject, ana.faulty_parity_reject, shots)},
        {"CC_R_S", detail::z_score(emp.cancel_sensor_reject, ana.cancel_sensor_reject, shots)},
        {"F_R_S", detail::z_score(emp.faulty_sensor_reject, ana.faulty_sensor_reject, shots)}};
    doc["effective_correct_empirical"] =
        OrderedJson{{"standard", effective_correct(emp, CodeMode::Standard)},
                    {"assisted", effective_correct(emp, CodeMode::Assisted)}};
    doc["effective_correct_analytic"] =
        OrderedJson{{"standard", effective_correct(ana, CodeMode::Standard)},
                    {"assisted", effective_correct(ana, CodeMode::Assisted)}};
    doc["audit"] =
        OrderedJson{{"checked", report.audited}, {"mismatches", report.audit_mismatches}};
    return doc;
}

inline std::string qec_mc_report_csv(const QecMonteCarloReport& report) {
    const OutcomeFractions emp = report.empirical();
    const OutcomeFractions ana =
        outcome_fractions(make_error_probabilities(report.config.o, report.config.p));
    const double shots = static_cast<double>(report.config.shots);

    struct Row {
        const char* name;
        std::uint64_t count;
        double empirical;
        double analytic;
    };
    const Row rows[] = {
        {"C_C", report.counts.correct_correct, emp.correct_correct, ana.correct_correct},
        {"CC_CC", report.counts.cancel_cancel, emp.cancel_cancel, ana.cancel_cancel},
        {"F_F", report.counts.faulty_faulty, emp.faulty_faulty, ana.faulty_faulty},
        {"CC_R_PT", report.counts.cancel_parity_reject, emp.cancel_parity_reject,
         ana.cancel_parity_reject},
        {"F_R_PT", report.counts.faulty_parity_reject, emp.faulty_parity_reject,
         ana.faulty_parity_reject},
        {"CC_R_S", report.counts.cancel_sensor_reject, emp.cancel_sensor_reject,
         ana.cancel_sensor_reject},
        {"F_R_S", report.counts.faulty_sensor_reject, emp.faulty_sensor_reject,
         ana.faulty_sensor_reject},
    };
    std::ostringstream out;
    out << "field,count,empirical,analytic,z_score\n";
    for (const Row& row : rows)
        out << row.name << ',' << row.count << ',' << format_g17(row.empirical) << ','
            << format_g17(row.analytic) << ','
            << format_g17(detail::z_score(row.empirical, row.analytic, shots)) << '\n';
    return out.str();
}

// ---- Deutsch-Jozsa ----

inline OrderedJson dj_config_json(const DjConfig& config) {
    return OrderedJson{{"shots", config.shots},
                       {"trials", config.trials},
                       {"gate_error_prob", config.gate_error_prob},
                       {"detectable_fraction", config.detectable_fraction},
                       {"veto_enabled", config.veto_enabled},
                       {"seed", config.seed}};
}

inline OrderedJson dj_trial_json(const ExperimentReport& report, std::uint64_t index) {
    OrderedJson counts, fractions;
    const std::array<double, 8> f = report.fractions();
    for (int s = 0; s < 8; ++s) {
        const std::string key = index_to_bitstring(static_cast<std::size_t>(s), 3);
        counts[key] = report.state_counts[static_cast<std::size_t>(s)];
        fractions[key] = f[static_cast<std::size_t>(s)];
    }
    return OrderedJson{{"trial", index},
                       {"counts", counts},
                       {"fractions", fractions},
                       {"rejected", report.rejected},
                       {"accepted", report.accepted},
                       {"correct_fraction", report.correct_fraction()}};
}

inline OrderedJson dj_report_json(const ExperimentReport& report) {
    OrderedJson doc;
    doc["config"] = dj_config_json(report.config);
    doc["trials"] = OrderedJson::array({dj_trial_json(report, 0)});
    return doc;
}

inline OrderedJson dj_trials_json(const TrialStatistics& stats) {
    OrderedJson doc;
    doc["config"] = dj_config_json(stats.config);
    OrderedJson trials = OrderedJson::array();
    for (std::size_t t = 0; t < stats.trials.size(); ++t)
        trials.push_back(dj_trial_json(stats.trials[t], t));
    doc["trials"] = trials;

    OrderedJson mean_fraction, std_fraction;
    for (int s = 0; s < 8; ++s) {
        const std::string key = index_to_bitstring(static_cast<std::size_t>(s), 3);
        mean_fraction[key] = stats.mean_fraction[static_cast<std::size_t>(s)];
        std_fraction[key] = stats.std_fraction[static_cast<std::size_t>(s)];
    }
    doc["summary"] = OrderedJson{{"mean_fraction", mean_fraction},
                                 {"std_fraction", std_fraction},
                                 {"mean_correct_fraction", stats.mean_correct_fraction},
                                 {"std_correct_fraction", stats.std_correct_fraction},
                                 {"mean_rejected_fraction", stats.mean_rejected_fraction},
                                 {"std_rejected_fraction", stats.std_rejected_fraction}};
    return doc;
}

namespace detail {
inline const char* dj_csv_header() {
    return "trial,rejected,accepted,c000,c001,c010,c011,c100,c101,c110,c111,correct_fraction\n";
}

inline void dj_csv_row(std::ostringstream& out, const ExperimentReport& report,
                       std::uint64_t index) {
    out << index << ',' << report.rejected << ',' << report.accepted;
    for (int s = 0; s < 8; ++s) out << ',' << report.state_counts[static_cast<std::size_t>(s)];
    out << ',' << format_g17(report.correct_fraction()) << '\n';
}
}  // namespace detail

inline std::string dj_report_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << detail::dj_csv_header();
    detail::dj_csv_row(out, report, 0);
    return out.str();
}

// Per-trial rows followed by columnwise mean and sample-std summary rows.
inline std::string dj_trials_csv(const TrialStatistics& stats) {
    std::ostringstream out;
    out << detail::dj_csv_header();
    for (std::size_t t = 0; t < stats.trials.size(); ++t)
        detail::dj_csv_row(out, stats.trials[t], t);

    const std::size_t n = stats.trials.size();
    auto column_stats = [&](auto getter) {
        std::vector<double> xs(n);
        for (std::size_t t = 0; t < n; ++t) xs[t] = getter(stats.trials[t]);
        return detail::mean_std(xs);
    };
    const auto rejected = column_stats([](const ExperimentReport& r) {
        return static_cast<double>(r.rejected);
    });
    const auto accepted = column_stats([](const ExperimentReport& r) {
        return static_cast<double>(r.accepted);
    });
    std::array<detail::MeanStd, 8> per_state;
    for (int s = 0; s < 8; ++s)
        per_state[static_cast<std::size_t>(s)] = column_stats([s](const ExperimentReport& r) {
            return static_cast<double>(r.state_counts[static_cast<std::size_t>(s)]);
        });
    const auto correct = column_stats([](const ExperimentReport& r) {
        return r.correct_fraction();
    });

    out << "mean," << format_g17(rejected.mean) << ',' << format_g17(accepted.mean);
    for (const auto& ms : per_state) out << ',' << format_g17(ms.mean);
    out << ',' << format_g17(correct.mean) << '\n';
    out << "std," << format_g17(rejected.std) << ',' << format_g17(accepted.std);
    for (const auto& ms : per_state) out << ',' << format_g17(ms.std);
    out << ',' << format_g17(correct.std) << '\n';
    return out.str();
}

}  // namespace sqec

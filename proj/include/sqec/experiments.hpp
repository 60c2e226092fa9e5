#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqec/noise_algebra.hpp"
#include "sqec/rng.hpp"
#include "sqec/sensor_qec.hpp"

namespace sqec {

// ---- Sampled-error Monte Carlo over the correction circuit ----

struct QecMonteCarloConfig {
    std::uint64_t shots = 1'000'000;
    double o = 0.0;
    double p = 0.0;
    std::uint64_t seed = 0;
    double sensor_efficiency = 1.0;
    // Fraction of shots whose classification is re-derived by executing the
    // full circuit on the statevector simulator.
    double audit_fraction = 0.01;
};

struct SampledMask {
    ErrorMask mask;
    std::uint8_t sensor = 0;
};

// Independent per-qubit draws: env with probability o, ent with probability
// p; each realized environmental error trips its sensor with probability
// sensor_efficiency.
inline SampledMask sample_error_mask(RngStream& rng, double o, double p,
                                     double sensor_efficiency) {
    SampledMask s;
    for (int q = 0; q < kDataQubits; ++q)
        if (rng.bernoulli(o)) s.mask.env |= static_cast<std::uint8_t>(1u << q);
    for (int q = 0; q < kDataQubits; ++q)
        if (rng.bernoulli(p)) s.mask.ent |= static_cast<std::uint8_t>(1u << q);
    for (int q = 0; q < kDataQubits; ++q)
        if ((s.mask.env & (1u << q)) && rng.bernoulli(sensor_efficiency))
            s.sensor |= static_cast<std::uint8_t>(1u << q);
    return s;
}

struct JointCounts {
    std::uint64_t correct_correct = 0;
    std::uint64_t cancel_cancel = 0;
    std::uint64_t faulty_faulty = 0;
    std::uint64_t cancel_parity_reject = 0;
    std::uint64_t faulty_parity_reject = 0;
    std::uint64_t cancel_sensor_reject = 0;
    std::uint64_t faulty_sensor_reject = 0;

    std::uint64_t total() const {
        return correct_correct + cancel_cancel + faulty_faulty + cancel_parity_reject +
               faulty_parity_reject + cancel_sensor_reject + faulty_sensor_reject;
    }
};

inline void tally_joint(JointCounts& counts, StandardOutcome standard, AssistedOutcome assisted) {
    switch (assisted) {
        case AssistedOutcome::AcceptCorrect: ++counts.correct_correct; return;
        case AssistedOutcome::AcceptCancellation: ++counts.cancel_cancel; return;
        case AssistedOutcome::AcceptFaulty: ++counts.faulty_faulty; return;
        case AssistedOutcome::RejectParityTest:
            if (standard == StandardOutcome::Correct)
                throw std::logic_error("correct case cannot reach a parity reject");
            (standard == StandardOutcome::Faulty ? counts.faulty_parity_reject
                                                 : counts.cancel_parity_reject)++;
            return;
        case AssistedOutcome::RejectSensor:
            if (standard == StandardOutcome::Correct)
                throw std::logic_error("correct case cannot reach a sensor reject");
            (standard == StandardOutcome::Faulty ? counts.faulty_sensor_reject
                                                 : counts.cancel_sensor_reject)++;
            return;
    }
    throw std::logic_error("unknown assisted outcome");
}

struct QecMonteCarloReport {
    QecMonteCarloConfig config;
    JointCounts counts;
    std::uint64_t audited = 0;
    std::uint64_t audit_mismatches = 0;

    OutcomeFractions empirical() const {
        const double n = static_cast<double>(config.shots);
        return OutcomeFractions{static_cast<double>(counts.correct_correct) / n,
                                static_cast<double>(counts.cancel_cancel) / n,
                                static_cast<double>(counts.faulty_faulty) / n,
                                static_cast<double>(counts.cancel_parity_reject) / n,
                                static_cast<double>(counts.faulty_parity_reject) / n,
                                static_cast<double>(counts.cancel_sensor_reject) / n,
                                static_cast<double>(counts.faulty_sensor_reject) / n};
    }
};

inline QecMonteCarloReport run_qec_montecarlo(const QecMonteCarloConfig& config) {
    if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");
    (void)make_error_probabilities(config.o, config.p);
    if (!(config.sensor_efficiency >= 0.0 && config.sensor_efficiency <= 1.0))
        throw std::domain_error("sensor_efficiency must be in [0, 1]");
    if (!(config.audit_fraction >= 0.0 && config.audit_fraction <= 1.0))
        throw std::domain_error("audit_fraction must be in [0, 1]");

    QecMonteCarloReport report;
    report.config = config;
    for (std::uint64_t shot = 0; shot < config.shots; ++shot) {
        RngStream rng(substream_seed(config.seed, 0, shot));
        const SampledMask sampled =
            sample_error_mask(rng, config.o, config.p, config.sensor_efficiency);
        const CaseRecord rec = classify_case(sampled.mask);
        const AssistedOutcome assisted = assisted_outcome(sampled.sensor, rec.syndrome, rec.standard);
        tally_joint(report.counts, rec.standard, assisted);

        if (config.audit_fraction > 0.0 && rng.bernoulli(config.audit_fraction)) {
            // Bloch angles kept away from X eigenstates so correct and faulty
            // final states stay distinguishable by fidelity.
            const BlochAngles psi{0.3 + 2.5 * rng.next_double(), 0.2 + 2.7 * rng.next_double()};
            const CircuitRun run = run_case_on_statevector(psi, sampled.mask, CodeVariant::BitFlip, rng);
            ++report.audited;
            if (run.syndrome != rec.syndrome ||
                run.correct != (rec.standard != StandardOutcome::Faulty))
                ++report.audit_mismatches;
        }
    }
    return report;
}

// ---- Balanced Deutsch-Jozsa benchmark with sensor veto ----

struct DjConfig {
    std::uint64_t shots = 81920;
    std::uint64_t trials = 1;
    double gate_error_prob = 0.07;
    double detectable_fraction = 0.40;
    bool veto_enabled = true;
    std::uint64_t seed = 0;
};

struct DjOp {
    enum class Kind : std::uint8_t { Gate, ErrorSite } kind = Kind::Gate;
    Gate gate;       // Kind::Gate
    int qubit = -1;  // Kind::ErrorSite: line the injected flip lands on
};

// Circuit with interleaved bit-flip injection points. Qubits 0..2 are the
// measured register; anything above is ancilla workspace.
struct DjCircuit {
    int num_qubits = 0;
    std::vector<DjOp> ops;

    int site_count() const {
        int n = 0;
        for (const DjOp& op : ops) n += op.kind == DjOp::Kind::ErrorSite;
        return n;
    }
};

// Answer qubit 3 starts in |-> and the oracle CNOT kicks its phase back onto
// qubit 0, so a clean run puts equal weight on the four odd states. One
// injection site follows every gate, the CNOT gets one per involved line, and
// each measured qubit gets one more ahead of readout: eleven sites in all.
inline DjCircuit build_dj_circuit() {
    DjCircuit c;
    c.num_qubits = 4;
    auto gate = [&c](Gate g) { c.ops.push_back({DjOp::Kind::Gate, g, -1}); };
    auto site = [&c](int q) { c.ops.push_back({DjOp::Kind::ErrorSite, Gate{}, q}); };
    gate(Gate::x(3));
    site(3);
    gate(Gate::h(3));
    site(3);
    gate(Gate::h(0));
    site(0);
    gate(Gate::h(1));
    site(1);
    gate(Gate::h(2));
    site(2);
    gate(Gate::cnot(0, 3));
    site(0);
    site(3);
    gate(Gate::h(0));
    site(0);
    site(0);
    site(1);
    site(2);
    return c;
}

// One op per line: "X 3", "CNOT 0,3", "TOFFOLI 0,1,2" or "SITE 2". Blank
// lines and '#' comments are ignored. Qubits 0..2 are always the measured
// register.
inline DjCircuit parse_dj_circuit(std::istream& in) {
    DjCircuit c;
    std::string line;
    int line_no = 0;
    int max_qubit = 2;
    auto fail = [&line_no](const std::string& msg) {
        throw std::invalid_argument("dj circuit line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string op;
        if (!(words >> op)) continue;
        std::string arg_text;
        words >> arg_text;
        std::vector<int> args;
        std::istringstream arg_stream(arg_text);
        std::string token;
        while (std::getline(arg_stream, token, ',')) {
            try {
                args.push_back(std::stoi(token));
            } catch (const std::exception&) {
                fail("bad qubit argument '" + token + "'");
            }
        }
        for (int q : args) {
            if (q < 0) fail("negative qubit index");
            if (q > max_qubit) max_qubit = q;
        }
        if (op == "SITE") {
            if (args.size() != 1) fail("SITE takes one qubit");
            c.ops.push_back({DjOp::Kind::ErrorSite, Gate{}, args[0]});
        } else if (op == "X" || op == "Z" || op == "H") {
            if (args.size() != 1) fail(op + " takes one qubit");
            const Gate g = op == "X" ? Gate::x(args[0])
                                     : (op == "Z" ? Gate::z(args[0]) : Gate::h(args[0]));
            c.ops.push_back({DjOp::Kind::Gate, g, -1});
        } else if (op == "CNOT") {
            if (args.size() != 2) fail("CNOT takes control,target");
            c.ops.push_back({DjOp::Kind::Gate, Gate::cnot(args[0], args[1]), -1});
        } else if (op == "TOFFOLI") {
            if (args.size() != 3) fail("TOFFOLI takes control,control,target");
            c.ops.push_back({DjOp::Kind::Gate, Gate::toffoli(args[0], args[1], args[2]), -1});
        } else {
            fail("unknown op '" + op + "'");
        }
    }
    c.num_qubits = max_qubit + 1;
    if (c.num_qubits > kMaxQubits)
        throw std::invalid_argument("dj circuit uses more than 8 qubits");
    return c;
}

inline std::string dj_circuit_text(const DjCircuit& c) {
    std::ostringstream out;
    for (const DjOp& op : c.ops) {
        if (op.kind == DjOp::Kind::ErrorSite) {
            out << "SITE " << op.qubit << '\n';
            continue;
        }
        switch (op.gate.kind) {
            case GateKind::X: out << "X " << op.gate.qubits[0] << '\n'; break;
            case GateKind::Z: out << "Z " << op.gate.qubits[0] << '\n'; break;
            case GateKind::H: out << "H " << op.gate.qubits[0] << '\n'; break;
            case GateKind::Cnot:
                out << "CNOT " << op.gate.qubits[0] << ',' << op.gate.qubits[1] << '\n';
                break;
            case GateKind::Toffoli:
                out << "TOFFOLI " << op.gate.qubits[0] << ',' << op.gate.qubits[1] << ','
                    << op.gate.qubits[2] << '\n';
                break;
            default: throw std::invalid_argument("gate kind not expressible in circuit text");
        }
    }
    return out.str();
}

// Executes the benchmark under an error pattern (bit s set = an X lands at
// site s) and caches the measured-register distribution per pattern; only
// 2^sites distinct circuits exist, so repeated patterns reuse the exact
// statevector result.
class DjEngine {
  public:
    explicit DjEngine(DjCircuit circuit) : circuit_(std::move(circuit)) {
        if (circuit_.num_qubits < kDataQubits || circuit_.num_qubits > kMaxQubits)
            throw std::invalid_argument("dj circuit must use between 3 and 8 qubits");
        if (circuit_.site_count() > 31)
            throw std::invalid_argument("dj circuit supports at most 31 error sites");
    }

    const DjCircuit& circuit() const { return circuit_; }

    const std::array<double, 8>& distribution(std::uint32_t pattern) {
        auto it = cache_.find(pattern);
        if (it == cache_.end()) it = cache_.emplace(pattern, compute_distribution(pattern)).first;
        return it->second;
    }

    // Measured 3-bit outcome of one accepted shot; u is the shot's uniform draw.
    int sample_outcome(std::uint32_t pattern, double u) {
        const std::array<double, 8>& dist = distribution(pattern);
        double cumulative = 0.0;
        int last_occupied = 0;
        for (int outcome = 0; outcome < 8; ++outcome) {
            if (dist[outcome] <= 0.0) continue;
            last_occupied = outcome;
            cumulative += dist[outcome];
            if (u < cumulative) return outcome;
        }
        return last_occupied;
    }

  private:
    std::array<double, 8> compute_distribution(std::uint32_t pattern) {
        PureState state = new_state(circuit_.num_qubits);
        int site = 0;
        for (const DjOp& op : circuit_.ops) {
            if (op.kind == DjOp::Kind::Gate) {
                apply_gate(state, op.gate);
            } else {
                if (pattern & (1u << site)) apply_x(state, op.qubit);
                ++site;
            }
        }
        std::array<double, 8> dist{};
        for (std::size_t i = 0; i < state.dimension(); ++i)
            dist[i & 7u] += std::norm(state.amplitudes[i]);
        return dist;
    }

    DjCircuit circuit_;
    std::unordered_map<std::uint32_t, std::array<double, 8>> cache_;
};

struct DjShotDraw {
    std::uint32_t pattern = 0;
    bool sensor_fired = false;
    bool vetoed = false;
    int outcome = -1;  // measured 3-bit state; -1 when vetoed
};

// Draw order is fixed per shot (sites, then detectability, then the
// measurement uniform), so veto-on and veto-off runs under one seed see the
// same error realizations shot for shot.
inline DjShotDraw draw_dj_shot(DjEngine& engine, const DjConfig& config, std::uint64_t trial,
                               std::uint64_t shot) {
    RngStream rng(substream_seed(config.seed, trial, shot));
    DjShotDraw draw;
    const int sites = engine.circuit().site_count();
    for (int s = 0; s < sites; ++s)
        if (rng.bernoulli(config.gate_error_prob)) draw.pattern |= 1u << s;
    for (int s = 0; s < sites; ++s)
        if ((draw.pattern & (1u << s)) && rng.bernoulli(config.detectable_fraction))
            draw.sensor_fired = true;
    draw.vetoed = draw.sensor_fired && config.veto_enabled;
    if (!draw.vetoed) draw.outcome = engine.sample_outcome(draw.pattern, rng.next_double());
    return draw;
}

// Ground-truth record of a single shot, mostly for inspection and tests.
struct ShotRecord {
    std::string measured;  // three chars, |q2 q1 q0|; empty when vetoed
    bool sensor_fired = false;
    bool vetoed = false;
    std::vector<int> error_sites_hit;
};

inline ShotRecord run_dj_shot(DjEngine& engine, const DjConfig& config, std::uint64_t trial,
                              std::uint64_t shot) {
    const DjShotDraw draw = draw_dj_shot(engine, config, trial, shot);
    ShotRecord record;
    record.sensor_fired = draw.sensor_fired;
    record.vetoed = draw.vetoed;
    for (int s = 0; s < engine.circuit().site_count(); ++s)
        if (draw.pattern & (1u << s)) record.error_sites_hit.push_back(s);
    if (!draw.vetoed) record.measured = index_to_bitstring(static_cast<std::size_t>(draw.outcome), 3);
    return record;
}

struct ExperimentReport {
    DjConfig config;
    std::array<std::uint64_t, 8> state_counts{};  // accepted shots, indexed by measured state
    std::uint64_t rejected = 0;
    std::uint64_t accepted = 0;

    std::array<double, 8> fractions() const {
        std::array<double, 8> f{};
        if (accepted == 0) return f;
        for (int s = 0; s < 8; ++s)
            f[static_cast<std::size_t>(s)] =
                static_cast<double>(state_counts[static_cast<std::size_t>(s)]) /
                static_cast<double>(accepted);
        return f;
    }

    // Weight on the odd states |001|, |011|, |101|, |111| among accepted shots.
    double correct_fraction() const {
        if (accepted == 0) return 0.0;
        std::uint64_t odd = 0;
        for (int s = 1; s < 8; s += 2) odd += state_counts[static_cast<std::size_t>(s)];
        return static_cast<double>(odd) / static_cast<double>(accepted);
    }
};

namespace detail {
inline void validate_dj_config(const DjConfig& config) {
    if (config.shots < 1) throw std::invalid_argument("shots must be >= 1");
    if (!(config.gate_error_prob >= 0.0 && config.gate_error_prob <= 1.0))
        throw std::domain_error("gate_error_prob must be in [0, 1]");
    if (!(config.detectable_fraction >= 0.0 && config.detectable_fraction <= 1.0))
        throw std::domain_error("detectable_fraction must be in [0, 1]");
}
}  // namespace detail

inline ExperimentReport run_dj_trial(DjEngine& engine, const DjConfig& config,
                                     std::uint64_t trial) {
    ExperimentReport report;
    report.config = config;
    for (std::uint64_t shot = 0; shot < config.shots; ++shot) {
        const DjShotDraw draw = draw_dj_shot(engine, config, trial, shot);
        if (draw.vetoed) {
            ++report.rejected;
            continue;
        }
        ++report.accepted;
        ++report.state_counts[static_cast<std::size_t>(draw.outcome)];
    }
    return report;
}

inline ExperimentReport run_dj_experiment(const DjConfig& config, DjEngine& engine) {
    detail::validate_dj_config(config);
    return run_dj_trial(engine, config, 0);
}

inline ExperimentReport run_dj_experiment(const DjConfig& config) {
    DjEngine engine(build_dj_circuit());
    return run_dj_experiment(config, engine);
}

struct TrialStatistics {
    DjConfig config;
    std::vector<ExperimentReport> trials;
    std::array<double, 8> mean_fraction{};
    std::array<double, 8> std_fraction{};
    double mean_correct_fraction = 0.0;
    double std_correct_fraction = 0.0;
    double mean_rejected_fraction = 0.0;
    double std_rejected_fraction = 0.0;
};

namespace detail {
struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

// Sample standard deviation (n - 1 denominator).
inline MeanStd mean_std(const std::vector<double>& xs) {
    MeanStd ms;
    if (xs.empty()) return ms;
    for (double x : xs) ms.mean += x;
    ms.mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return ms;
    double ss = 0.0;
    for (double x : xs) ss += (x - ms.mean) * (x - ms.mean);
    ms.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return ms;
}
}  // namespace detail

// Independent repetitions with per-trial derived seeds.
inline TrialStatistics run_trials(const DjConfig& config, DjEngine& engine) {
    detail::validate_dj_config(config);
    if (config.trials < 2) throw std::invalid_argument("run_trials needs trials >= 2");
    TrialStatistics stats;
    stats.config = config;
    stats.trials.reserve(config.trials);
    for (std::uint64_t t = 0; t < config.trials; ++t)
        stats.trials.push_back(run_dj_trial(engine, config, t));

    std::vector<double> values(stats.trials.size());
    for (int s = 0; s < 8; ++s) {
        for (std::size_t t = 0; t < stats.trials.size(); ++t)
            values[t] = stats.trials[t].fractions()[static_cast<std::size_t>(s)];
        const detail::MeanStd ms = detail::mean_std(values);
        stats.mean_fraction[static_cast<std::size_t>(s)] = ms.mean;
        stats.std_fraction[static_cast<std::size_t>(s)] = ms.std;
    }
    for (std::size_t t = 0; t < stats.trials.size(); ++t)
        values[t] = stats.trials[t].correct_fraction();
    const detail::MeanStd correct = detail::mean_std(values);
    stats.mean_correct_fraction = correct.mean;
    stats.std_correct_fraction = correct.std;

    for (std::size_t t = 0; t < stats.trials.size(); ++t)
        values[t] = static_cast<double>(stats.trials[t].rejected) /
                    static_cast<double>(config.shots);
    const detail::MeanStd rejected = detail::mean_std(values);
    stats.mean_rejected_fraction = rejected.mean;
    stats.std_rejected_fraction = rejected.std;
    return stats;
}

inline TrialStatistics run_trials(const DjConfig& config) {
    DjEngine engine(build_dj_circuit());
    return run_trials(config, engine);
}

}  // namespace sqec

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sqec/error_mask.hpp"
#include "sqec/statevector.hpp"

namespace sqec {

enum class StandardOutcome : std::uint8_t { Correct, CorrectViaCancellation, Faulty };

enum class AssistedOutcome : std::uint8_t {
    AcceptCorrect,
    AcceptCancellation,
    AcceptFaulty,
    RejectParityTest,
    RejectSensor,
};

inline const char* to_string(StandardOutcome o) {
    switch (o) {
        case StandardOutcome::Correct: return "C";
        case StandardOutcome::CorrectViaCancellation: return "CC";
        case StandardOutcome::Faulty: return "F";
    }
    return "?";
}

inline const char* to_string(AssistedOutcome o) {
    switch (o) {
        case AssistedOutcome::AcceptCorrect: return "ACCEPT_C";
        case AssistedOutcome::AcceptCancellation: return "ACCEPT_CC";
        case AssistedOutcome::AcceptFaulty: return "ACCEPT_F";
        case AssistedOutcome::RejectParityTest: return "REJECT_PT";
        case AssistedOutcome::RejectSensor: return "REJECT_S";
    }
    return "?";
}

inline bool is_reject(AssistedOutcome o) {
    return o == AssistedOutcome::RejectParityTest || o == AssistedOutcome::RejectSensor;
}

// Ancilla parity bits: bit 0 = q0 xor q1, bit 1 = q0 xor q2. This pairing is
// what reproduces the published syndrome values.
inline std::uint8_t syndrome_of(std::uint8_t resultant) {
    require_mask3(resultant, "resultant");
    const unsigned q0 = resultant & 1u;
    const unsigned q1 = (resultant >> 1) & 1u;
    const unsigned q2 = (resultant >> 2) & 1u;
    return static_cast<std::uint8_t>((q0 ^ q1) | ((q0 ^ q2) << 1));
}

// Data-qubit flip the decoder applies for each syndrome value.
inline std::uint8_t correction_for(std::uint8_t syndrome) {
    constexpr std::array<std::uint8_t, 4> kFlip{0b000, 0b010, 0b100, 0b001};
    if (syndrome > 3u) throw std::out_of_range("syndrome must be a 2-bit value");
    return kFlip[syndrome];
}

// Veto when two or more sensors fired: register values 0x3, 0x5, 0x6, 0x7.
inline bool sensor_reject(std::uint8_t sensor_register) {
    require_mask3(sensor_register, "sensor register");
    return popcount3(sensor_register) >= 2;
}

// Disposition of one shot given the sensor register and the measured
// syndrome. A single fired sensor on qubit k is accepted only when the
// syndrome is consistent with at most a single flip on k: clean (0x0, the
// flip canceled) or exactly the syndrome a lone flip on k produces.
inline AssistedOutcome assisted_outcome(std::uint8_t sensor_register, std::uint8_t syndrome,
                                        StandardOutcome standard) {
    if (sensor_reject(sensor_register)) return AssistedOutcome::RejectSensor;
    if (popcount3(sensor_register) == 1) {
        const int fired = std::countr_zero(static_cast<unsigned>(sensor_register));
        const std::uint8_t expected = syndrome_of(static_cast<std::uint8_t>(1u << fired));
        if (syndrome != 0 && syndrome != expected) return AssistedOutcome::RejectParityTest;
    }
    switch (standard) {
        case StandardOutcome::Correct: return AssistedOutcome::AcceptCorrect;
        case StandardOutcome::CorrectViaCancellation: return AssistedOutcome::AcceptCancellation;
        case StandardOutcome::Faulty: return AssistedOutcome::AcceptFaulty;
    }
    return AssistedOutcome::AcceptFaulty;
}

// One row of the 64-case truth table.
struct CaseRecord {
    ErrorMask mask;
    std::uint8_t resultant = 0;
    std::uint8_t syndrome = 0;
    StandardOutcome standard = StandardOutcome::Correct;
    AssistedOutcome assisted = AssistedOutcome::AcceptCorrect;
    int env_errors = 0;  // exponent of o; obar carries 3 - env_errors
    int ent_errors = 0;  // exponent of p; pbar carries 3 - ent_errors
};

inline CaseRecord classify_case(ErrorMask mask) {
    require_mask3(mask.env, "env mask");
    require_mask3(mask.ent, "ent mask");
    CaseRecord rec;
    rec.mask = mask;
    rec.resultant = mask.resultant();
    rec.syndrome = syndrome_of(rec.resultant);
    rec.env_errors = popcount3(mask.env);
    rec.ent_errors = popcount3(mask.ent);

    const std::uint8_t corrected = rec.resultant ^ correction_for(rec.syndrome);
    if (corrected != 0)
        rec.standard = StandardOutcome::Faulty;
    else if (mask.env & mask.ent)
        rec.standard = StandardOutcome::CorrectViaCancellation;
    else
        rec.standard = StandardOutcome::Correct;

    // The table assumes every environmental disturbance is sensed; the Monte
    // Carlo layer owns the efficiency knob.
    rec.assisted = assisted_outcome(mask.env, rec.syndrome, rec.standard);
    return rec;
}

// All 64 cases in lexicographic (env, ent) order.
inline std::array<CaseRecord, 64> enumerate_truth_table() {
    std::array<CaseRecord, 64> table{};
    for (std::uint8_t env = 0; env < 8; ++env)
        for (std::uint8_t ent = 0; ent < 8; ++ent)
            table[static_cast<std::size_t>(env) * 8 + ent] = classify_case(ErrorMask{env, ent});
    return table;
}

inline std::string syndrome_hex(std::uint8_t syndrome) {
    std::string s = "0x0";
    s[2] = static_cast<char>('0' + (syndrome & 3u));
    return s;
}

inline std::string truth_table_csv() {
    std::ostringstream out;
    out << "env_mask,ent_mask,resultant,syndrome_hex,o_exp,p_exp,obar_exp,pbar_exp,"
           "standard,assisted\n";
    for (const CaseRecord& rec : enumerate_truth_table()) {
        out << bits3_to_string(rec.mask.env) << ',' << bits3_to_string(rec.mask.ent) << ','
            << bits3_to_string(rec.resultant) << ',' << syndrome_hex(rec.syndrome) << ','
            << rec.env_errors << ',' << rec.ent_errors << ',' << (3 - rec.env_errors) << ','
            << (3 - rec.ent_errors) << ',' << to_string(rec.standard) << ','
            << to_string(rec.assisted) << '\n';
    }
    return out.str();
}

// ---- Circuit-level realization ----

enum class CodeVariant : std::uint8_t { BitFlip, PhaseFlip };

// Stages in circuit column order. The error channel sits between encoding and
// sensor readout; the ancilla register is written between syndrome extraction
// and correction.
enum class CircuitStage : std::uint8_t {
    Prepare,
    Encode,
    ErrorChannel,
    SensorReadout,
    Syndrome,
    Correction,
    Decode,
    Measure,
};

inline int stage_index(CircuitStage s) { return static_cast<int>(s); }

struct StagedGate {
    CircuitStage stage;
    Gate gate;
};

struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

// Gate list for the five-qubit circuit: data qubits 0..2, syndrome ancillas
// 3..4. Preparation of the protected state is parameterized by `psi` rather
// than carried as gates.
struct CircuitSpec {
    CodeVariant variant = CodeVariant::BitFlip;
    BlochAngles psi;
    ErrorMask mask;
    std::vector<StagedGate> gates;
};

inline constexpr int kDataQubits = 3;
inline constexpr int kAncillaA = 3;  // parity q0 xor q1
inline constexpr int kAncillaB = 4;  // parity q0 xor q2

// The phase-flip variant is the same circuit with Hadamards wrapped around
// the error channel (and sensor readout) on each data qubit, and Z in place
// of X as the injected error.
inline CircuitSpec build_circuit(BlochAngles psi, ErrorMask mask, CodeVariant variant) {
    require_mask3(mask.env, "env mask");
    require_mask3(mask.ent, "ent mask");
    CircuitSpec spec;
    spec.variant = variant;
    spec.psi = psi;
    spec.mask = mask;
    auto& g = spec.gates;

    g.push_back({CircuitStage::Encode, Gate::cnot(0, 1)});
    g.push_back({CircuitStage::Encode, Gate::cnot(0, 2)});
    if (variant == CodeVariant::PhaseFlip)
        for (int q = 0; q < kDataQubits; ++q) g.push_back({CircuitStage::Encode, Gate::h(q)});

    Gate (*error_gate)(int) = variant == CodeVariant::PhaseFlip ? &Gate::z : &Gate::x;
    for (int q = 0; q < kDataQubits; ++q)
        if (mask.env & (1u << q)) g.push_back({CircuitStage::ErrorChannel, error_gate(q)});
    for (int q = 0; q < kDataQubits; ++q)
        if (mask.ent & (1u << q)) g.push_back({CircuitStage::ErrorChannel, error_gate(q)});

    // Sensor readout is purely classical; no gate touches the qubits.

    if (variant == CodeVariant::PhaseFlip)
        for (int q = 0; q < kDataQubits; ++q) g.push_back({CircuitStage::Syndrome, Gate::h(q)});
    g.push_back({CircuitStage::Syndrome, Gate::cnot(0, kAncillaA)});
    g.push_back({CircuitStage::Syndrome, Gate::cnot(1, kAncillaA)});
    g.push_back({CircuitStage::Syndrome, Gate::cnot(0, kAncillaB)});
    g.push_back({CircuitStage::Syndrome, Gate::cnot(2, kAncillaB)});

    g.push_back({CircuitStage::Correction,
                 Gate::classical_x(0, {ClassicalRegisterId::Ancilla, 0b11, 0b11})});
    g.push_back({CircuitStage::Correction,
                 Gate::classical_x(1, {ClassicalRegisterId::Ancilla, 0b11, 0b01})});
    g.push_back({CircuitStage::Correction,
                 Gate::classical_x(2, {ClassicalRegisterId::Ancilla, 0b11, 0b10})});

    g.push_back({CircuitStage::Decode, Gate::cnot(0, 1)});
    g.push_back({CircuitStage::Decode, Gate::cnot(0, 2)});
    return spec;
}

struct CircuitRun {
    std::uint8_t syndrome = 0;
    double fidelity_to_input = 0.0;
    bool correct = false;
    PureState final_state;
};

// Executes the circuit on the statevector simulator. The ancilla pair is
// measured into the classical register between the syndrome and correction
// stages; vetoing happens outside the circuit, so the sensor register is
// carried along but never consulted here.
inline CircuitRun run_circuit(const CircuitSpec& spec, RngStream& rng) {
    PureState state = tensor(prepare_bloch(spec.psi.theta, spec.psi.phi), new_state(4));
    ClassicalRegisters classical;
    classical.sensor = spec.mask.env;

    bool ancilla_measured = false;
    auto measure_ancillas = [&] {
        const int a = measure_qubit(state, kAncillaA, rng);
        const int b = measure_qubit(state, kAncillaB, rng);
        classical.ancilla = static_cast<std::uint8_t>(a | (b << 1));
        ancilla_measured = true;
    };
    for (const StagedGate& staged : spec.gates) {
        if (!ancilla_measured && stage_index(staged.stage) >= stage_index(CircuitStage::Correction))
            measure_ancillas();
        apply_gate(state, staged.gate, classical);
    }
    if (!ancilla_measured) measure_ancillas();

    CircuitRun run;
    run.syndrome = classical.ancilla;

    // After decoding, qubits 1..2 are back at |0> and the ancillas hold the
    // syndrome, so the preserved qubit can be compared directly against the
    // input (any residual error is a pure X, giving fidelity |<psi|X|psi>|^2).
    const PureState psi = prepare_bloch(spec.psi.theta, spec.psi.phi);
    const std::size_t base =
        (static_cast<std::size_t>(classical.ancilla & 1u) << kAncillaA) |
        (static_cast<std::size_t>((classical.ancilla >> 1) & 1u) << kAncillaB);
    const Amplitude overlap = std::conj(psi.amplitudes[0]) * state.amplitudes[base] +
                              std::conj(psi.amplitudes[1]) * state.amplitudes[base | 1];
    run.fidelity_to_input = std::norm(overlap);
    run.correct = run.fidelity_to_input >= 1.0 - 1e-9;
    run.final_state = std::move(state);
    return run;
}

inline CircuitRun run_case_on_statevector(BlochAngles psi, ErrorMask mask, CodeVariant variant,
                                          RngStream& rng) {
    return run_circuit(build_circuit(psi, mask, variant), rng);
}

}  // namespace sqec

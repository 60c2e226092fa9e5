#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqec/rng.hpp"

namespace sqec {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 8;

// Dense amplitude vector over num_qubits qubits. Basis index bit k carries
// qubit k, so a rendered bitstring reads |q_{n-1} ... q1 q0| left to right.
struct PureState {
    int num_qubits = 0;
    std::vector<Amplitude> amplitudes;

    std::size_t dimension() const { return amplitudes.size(); }

    double norm_sq() const {
        double total = 0.0;
        for (const Amplitude& a : amplitudes) total += std::norm(a);
        return total;
    }
};

inline PureState new_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::out_of_range("new_state: num_qubits must be in [1, 8]");
    PureState state;
    state.num_qubits = num_qubits;
    state.amplitudes.assign(std::size_t{1} << num_qubits, Amplitude{});
    state.amplitudes[0] = 1.0;
    return state;
}

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
inline PureState prepare_bloch(double theta, double phi) {
    PureState state = new_state(1);
    state.amplitudes[0] = std::cos(theta / 2.0);
    state.amplitudes[1] = std::polar(std::sin(theta / 2.0), phi);
    return state;
}

// Kronecker product; `low` occupies the low-order qubits of the result.
inline PureState tensor(const PureState& low, const PureState& high) {
    if (low.num_qubits + high.num_qubits > kMaxQubits)
        throw std::out_of_range("tensor: combined state exceeds 8 qubits");
    PureState out;
    out.num_qubits = low.num_qubits + high.num_qubits;
    out.amplitudes.assign(std::size_t{1} << out.num_qubits, Amplitude{});
    for (std::size_t h = 0; h < high.dimension(); ++h) {
        if (high.amplitudes[h] == Amplitude{}) continue;
        const std::size_t base = h << low.num_qubits;
        for (std::size_t l = 0; l < low.dimension(); ++l)
            out.amplitudes[base | l] = high.amplitudes[h] * low.amplitudes[l];
    }
    return out;
}

enum class GateKind : std::uint8_t { X, Z, H, Cnot, Toffoli, ClassicalX };

enum class ClassicalRegisterId : std::uint8_t { Sensor, Ancilla };

// Classical control: fires when (register & mask) == value.
struct ClassicalCondition {
    ClassicalRegisterId reg = ClassicalRegisterId::Ancilla;
    std::uint8_t mask = 0;
    std::uint8_t value = 0;
};

// The circuit's classical side: three sensor bits (one per data qubit) and
// two ancilla bits holding the measured syndrome.
struct ClassicalRegisters {
    std::uint8_t sensor = 0;
    std::uint8_t ancilla = 0;

    std::uint8_t read(ClassicalRegisterId id) const {
        return id == ClassicalRegisterId::Sensor ? sensor : ancilla;
    }
    bool satisfies(const ClassicalCondition& cond) const {
        return (read(cond.reg) & cond.mask) == cond.value;
    }
};

struct Gate {
    GateKind kind = GateKind::X;
    // X/Z/H/ClassicalX use [0] as target; Cnot is [control, target];
    // Toffoli is [control, control, target]. Unused slots stay -1.
    std::array<int, 3> qubits{-1, -1, -1};
    std::optional<ClassicalCondition> condition;  // ClassicalX only

    static Gate x(int target) { return Gate{GateKind::X, {target, -1, -1}, std::nullopt}; }
    static Gate z(int target) { return Gate{GateKind::Z, {target, -1, -1}, std::nullopt}; }
    static Gate h(int target) { return Gate{GateKind::H, {target, -1, -1}, std::nullopt}; }
    static Gate cnot(int control, int target) {
        return Gate{GateKind::Cnot, {control, target, -1}, std::nullopt};
    }
    static Gate toffoli(int control_a, int control_b, int target) {
        return Gate{GateKind::Toffoli, {control_a, control_b, target}, std::nullopt};
    }
    static Gate classical_x(int target, ClassicalCondition cond) {
        return Gate{GateKind::ClassicalX, {target, -1, -1}, cond};
    }
};

namespace detail {
inline void check_qubit(const PureState& state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits)
        throw std::out_of_range("qubit index out of range");
}
}  // namespace detail

inline void apply_x(PureState& state, int qubit) {
    detail::check_qubit(state, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if (!(i & bit)) std::swap(state.amplitudes[i], state.amplitudes[i | bit]);
}

inline void apply_z(PureState& state, int qubit) {
    detail::check_qubit(state, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if (i & bit) state.amplitudes[i] = -state.amplitudes[i];
}

inline void apply_h(PureState& state, int qubit) {
    detail::check_qubit(state, qubit);
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (i & bit) continue;
        const Amplitude a = state.amplitudes[i];
        const Amplitude b = state.amplitudes[i | bit];
        state.amplitudes[i] = (a + b) * inv_sqrt2;
        state.amplitudes[i | bit] = (a - b) * inv_sqrt2;
    }
}

inline void apply_cnot(PureState& state, int control, int target) {
    detail::check_qubit(state, control);
    detail::check_qubit(state, target);
    if (control == target) throw std::invalid_argument("cnot: control equals target");
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if ((i & cbit) && !(i & tbit))
            std::swap(state.amplitudes[i], state.amplitudes[i | tbit]);
}

inline void apply_toffoli(PureState& state, int control_a, int control_b, int target) {
    detail::check_qubit(state, control_a);
    detail::check_qubit(state, control_b);
    detail::check_qubit(state, target);
    if (control_a == control_b || control_a == target || control_b == target)
        throw std::invalid_argument("toffoli: qubit indices must be distinct");
    const std::size_t abit = std::size_t{1} << control_a;
    const std::size_t bbit = std::size_t{1} << control_b;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if ((i & abit) && (i & bbit) && !(i & tbit))
            std::swap(state.amplitudes[i], state.amplitudes[i | tbit]);
}

inline void apply_gate(PureState& state, const Gate& gate, const ClassicalRegisters& classical) {
    switch (gate.kind) {
        case GateKind::X: apply_x(state, gate.qubits[0]); return;
        case GateKind::Z: apply_z(state, gate.qubits[0]); return;
        case GateKind::H: apply_h(state, gate.qubits[0]); return;
        case GateKind::Cnot: apply_cnot(state, gate.qubits[0], gate.qubits[1]); return;
        case GateKind::Toffoli:
            apply_toffoli(state, gate.qubits[0], gate.qubits[1], gate.qubits[2]);
            return;
        case GateKind::ClassicalX:
            if (!gate.condition)
                throw std::invalid_argument("classically controlled X without a condition");
            if (classical.satisfies(*gate.condition)) apply_x(state, gate.qubits[0]);
            return;
    }
    throw std::invalid_argument("unknown gate kind");
}

inline void apply_gate(PureState& state, const Gate& gate) {
    apply_gate(state, gate, ClassicalRegisters{});
}

inline std::string index_to_bitstring(std::size_t index, int num_qubits) {
    std::string s(static_cast<std::size_t>(num_qubits), '0');
    for (int k = 0; k < num_qubits; ++k)
        if (index & (std::size_t{1} << k)) s[static_cast<std::size_t>(num_qubits - 1 - k)] = '1';
    return s;
}

// Samples a basis index from |amplitude|^2. Exactly one uniform draw per call.
inline std::size_t sample_basis_index(const PureState& state, RngStream& rng) {
    const double u = rng.next_double();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        cumulative += std::norm(state.amplitudes[i]);
        if (u < cumulative) return i;
    }
    return state.dimension() - 1;
}

inline std::string measure_all(const PureState& state, RngStream& rng) {
    return index_to_bitstring(sample_basis_index(state, rng), state.num_qubits);
}

// Projective measurement of a single qubit; collapses and renormalizes in place.
inline int measure_qubit(PureState& state, int qubit, RngStream& rng) {
    detail::check_qubit(state, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p_one = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i)
        if (i & bit) p_one += std::norm(state.amplitudes[i]);
    const int outcome = rng.next_double() < p_one ? 1 : 0;
    const double keep = outcome ? p_one : 1.0 - p_one;
    const double scale = 1.0 / std::sqrt(keep);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (((i & bit) != 0) != (outcome == 1))
            state.amplitudes[i] = Amplitude{};
        else
            state.amplitudes[i] *= scale;
    }
    return outcome;
}

// |<a|b>|^2; insensitive to global phase.
inline double fidelity(const PureState& a, const PureState& b) {
    if (a.num_qubits != b.num_qubits) throw std::invalid_argument("fidelity: dimension mismatch");
    Amplitude overlap{};
    for (std::size_t i = 0; i < a.dimension(); ++i)
        overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return std::norm(overlap);
}

}  // namespace sqec

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqec {

// One draw of the two-type error channel over the three data qubits. Bit k
// of each field marks qubit k: env holds the environmental (sensor
// detectable) flips, ent the entangling flips the sensors cannot see.
struct ErrorMask {
    std::uint8_t env = 0;
    std::uint8_t ent = 0;

    // Flips that survive after same-qubit pairs cancel.
    std::uint8_t resultant() const { return static_cast<std::uint8_t>(env ^ ent); }
};

inline int popcount3(std::uint8_t bits) { return std::popcount(static_cast<unsigned>(bits & 7u)); }

inline void require_mask3(std::uint8_t bits, const char* what) {
    if (bits > 7u) throw std::out_of_range(std::string(what) + " must be a 3-bit value");
}

// Renders bit 0 as the rightmost character, |q2 q1 q0| style.
inline std::string bits3_to_string(std::uint8_t bits) {
    std::string s(3, '0');
    for (int k = 0; k < 3; ++k)
        if (bits & (1u << k)) s[static_cast<std::size_t>(2 - k)] = '1';
    return s;
}

}  // namespace sqec

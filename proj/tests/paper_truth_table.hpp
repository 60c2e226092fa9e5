#pragma once

#include <array>
#include <cstdint>

// The published 64-row classification, transcribed block by block. Each row
// carries the environmental mask, the entangling mask, the syndrome value,
// the per-type error exponents, and both outcome labels ("C", "CC", "F",
// "R_PT", "R_S"). Entangling masks inside a block follow the printed order
// (000),(001),(010),(100),(011),(101),(110),(111).
namespace paper_table {

struct Row {
    std::uint8_t env;
    std::uint8_t ent;
    std::uint8_t syndrome;
    int o_exp;
    int p_exp;
    const char* standard;
    const char* assisted;
};

inline constexpr std::array<Row, 64> kRows{{
    // [000] block
    {0b000, 0b000, 0x0, 0, 0, "C", "C"},
    {0b000, 0b001, 0x3, 0, 1, "C", "C"},
    {0b000, 0b010, 0x1, 0, 1, "C", "C"},
    {0b000, 0b100, 0x2, 0, 1, "C", "C"},
    {0b000, 0b011, 0x2, 0, 2, "F", "F"},
    {0b000, 0b101, 0x1, 0, 2, "F", "F"},
    {0b000, 0b110, 0x3, 0, 2, "F", "F"},
    {0b000, 0b111, 0x0, 0, 3, "F", "F"},
    // [001] block
    {0b001, 0b000, 0x3, 1, 0, "C", "C"},
    {0b001, 0b001, 0x0, 1, 1, "CC", "CC"},
    {0b001, 0b010, 0x2, 1, 1, "F", "R_PT"},
    {0b001, 0b100, 0x1, 1, 1, "F", "R_PT"},
    {0b001, 0b011, 0x1, 1, 2, "CC", "R_PT"},
    {0b001, 0b101, 0x2, 1, 2, "CC", "R_PT"},
    {0b001, 0b110, 0x0, 1, 2, "F", "F"},
    {0b001, 0b111, 0x3, 1, 3, "F", "F"},
    // [010] block
    {0b010, 0b000, 0x1, 1, 0, "C", "C"},
    {0b010, 0b001, 0x2, 1, 1, "F", "R_PT"},
    {0b010, 0b010, 0x0, 1, 1, "CC", "CC"},
    {0b010, 0b100, 0x3, 1, 1, "F", "R_PT"},
    {0b010, 0b011, 0x3, 1, 2, "CC", "R_PT"},
    {0b010, 0b101, 0x0, 1, 2, "F", "F"},
    {0b010, 0b110, 0x2, 1, 2, "CC", "R_PT"},
    {0b010, 0b111, 0x1, 1, 3, "F", "F"},
    // [100] block
    {0b100, 0b000, 0x2, 1, 0, "C", "C"},
    {0b100, 0b001, 0x1, 1, 1, "F", "R_PT"},
    {0b100, 0b010, 0x3, 1, 1, "F", "R_PT"},
    {0b100, 0b100, 0x0, 1, 1, "CC", "CC"},
    {0b100, 0b011, 0x0, 1, 2, "F", "F"},
    {0b100, 0b101, 0x3, 1, 2, "CC", "R_PT"},
    {0b100, 0b110, 0x1, 1, 2, "CC", "R_PT"},
    {0b100, 0b111, 0x2, 1, 3, "F", "F"},
    // [011] block
    {0b011, 0b000, 0x2, 2, 0, "F", "R_S"},
    {0b011, 0b001, 0x1, 2, 1, "CC", "R_S"},
    {0b011, 0b010, 0x3, 2, 1, "CC", "R_S"},
    {0b011, 0b100, 0x0, 2, 1, "F", "R_S"},
    {0b011, 0b011, 0x0, 2, 2, "CC", "R_S"},
    {0b011, 0b101, 0x3, 2, 2, "F", "R_S"},
    {0b011, 0b110, 0x1, 2, 2, "F", "R_S"},
    {0b011, 0b111, 0x2, 2, 3, "CC", "R_S"},
    // [101] block
    {0b101, 0b000, 0x1, 2, 0, "F", "R_S"},
    {0b101, 0b001, 0x2, 2, 1, "CC", "R_S"},
    {0b101, 0b010, 0x0, 2, 1, "F", "R_S"},
    {0b101, 0b100, 0x3, 2, 1, "CC", "R_S"},
    {0b101, 0b011, 0x3, 2, 2, "F", "R_S"},
    {0b101, 0b101, 0x0, 2, 2, "CC", "R_S"},
    {0b101, 0b110, 0x2, 2, 2, "F", "R_S"},
    {0b101, 0b111, 0x1, 2, 3, "CC", "R_S"},
    // [110] block
    {0b110, 0b000, 0x3, 2, 0, "F", "R_S"},
    {0b110, 0b001, 0x0, 2, 1, "F", "R_S"},
    {0b110, 0b010, 0x2, 2, 1, "CC", "R_S"},
    {0b110, 0b100, 0x1, 2, 1, "CC", "R_S"},
    {0b110, 0b011, 0x1, 2, 2, "F", "R_S"},
    {0b110, 0b101, 0x2, 2, 2, "F", "R_S"},
    {0b110, 0b110, 0x0, 2, 2, "CC", "R_S"},
    {0b110, 0b111, 0x3, 2, 3, "CC", "R_S"},
    // [111] block
    {0b111, 0b000, 0x0, 3, 0, "F", "R_S"},
    {0b111, 0b001, 0x3, 3, 1, "F", "R_S"},
    {0b111, 0b010, 0x1, 3, 1, "F", "R_S"},
    {0b111, 0b100, 0x2, 3, 1, "F", "R_S"},
    {0b111, 0b011, 0x2, 3, 2, "CC", "R_S"},
    {0b111, 0b101, 0x1, 3, 2, "CC", "R_S"},
    {0b111, 0b110, 0x3, 3, 2, "CC", "R_S"},
    {0b111, 0b111, 0x0, 3, 3, "CC", "R_S"},
}};

}  // namespace paper_table

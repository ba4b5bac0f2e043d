#pragma once

#include <cstdint>
#include <optional>

namespace bml {

// One byte per cell. LR vehicles move left-to-right, TB vehicles top-to-bottom.
enum class Cell : std::uint8_t { Empty = 0, LR = 1, TB = 2 };

constexpr bool is_valid(Cell c) { return static_cast<std::uint8_t>(c) <= 2; }

// Text fixture mapping: '.' empty, '>' LR, 'v' TB.
constexpr char to_char(Cell c) {
    switch (c) {
        case Cell::LR: return '>';
        case Cell::TB: return 'v';
        default: return '.';
    }
}

constexpr std::optional<Cell> cell_from_char(char ch) {
    switch (ch) {
        case '.': return Cell::Empty;
        case '>': return Cell::LR;
        case 'v': return Cell::TB;
        default: return std::nullopt;
    }
}

}  // namespace bml

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "bml/grid.hpp"

namespace bml {

struct Rgb {
    std::uint8_t r, g, b;
};

inline constexpr Rgb kLrColor{255, 0, 0};
inline constexpr Rgb kTbColor{0, 0, 255};
inline constexpr Rgb kEmptyColor{255, 255, 255};

/// Binary PPM: header exactly "P6\n<n> <n>\n255\n", then one RGB triplet per
/// interior cell, row-major. Total size = header length + 3n² bytes.
std::vector<std::uint8_t> encode_ppm(const Grid& g);

/// encode_ppm written to `path`; throws std::runtime_error naming the path on
/// I/O failure.
void write_ppm(const Grid& g, const std::filesystem::path& path);

}  // namespace bml

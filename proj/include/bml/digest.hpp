#pragma once

#include <cstdint>
#include <span>

#include "bml/grid.hpp"

namespace bml {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes,
                                std::uint64_t h = kFnvOffsetBasis) {
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= kFnvPrime;
    }
    return h;
}

/// FNV-1a over the interior cell bytes, row-major. Layout-independent.
std::uint64_t grid_digest(const Grid& g);

}  // namespace bml

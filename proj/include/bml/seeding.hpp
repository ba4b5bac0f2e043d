#pragma once

#include <cstdint>

#include "bml/grid.hpp"

namespace bml {

/// SplitMix64 (Steele/Lea/Flood constants). Chosen for reproducibility: tiny,
/// public test vectors, trivially reimplementable in any language.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Exactly uniform draw from [0, m): values at or above the top multiple of m
/// are rejected and redrawn. Throws std::invalid_argument on m == 0.
std::uint64_t bounded(SplitMix64& rng, std::uint64_t m);

struct SeedSpec {
    int n = 0;
    double rho = 0.0;       // occupied fraction, split evenly between species
    std::uint64_t seed = 0;
};

/// floor(rho · n² / 2), the exact count of each vehicle species.
std::int64_t vehicles_per_species(int n, double rho);

/// Deterministic random placement: Fisher–Yates shuffle (descending, swaps
/// driven by bounded()) of the n² interior indices; the first k shuffled
/// indices become LR, the next k TB. Halo layout, ghosts unfilled.
Grid init_grid(const SeedSpec& spec);

}  // namespace bml

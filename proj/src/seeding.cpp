#include "bml/seeding.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bml {

std::uint64_t bounded(SplitMix64& rng, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("bounded: m must be >= 1");
    const std::uint64_t rem = (UINT64_MAX % m + 1) % m;  // 2^64 mod m
    const std::uint64_t top = 0 - rem;                   // rem == 0: every draw accepted
    for (;;) {
        const std::uint64_t r = rng.next();
        if (rem == 0 || r < top) return r % m;
    }
}

std::int64_t vehicles_per_species(int n, double rho) {
    return static_cast<std::int64_t>(
        std::floor(rho * static_cast<double>(n) * static_cast<double>(n) / 2.0));
}

Grid init_grid(const SeedSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("init_grid: n must be >= 1");
    if (!(spec.rho >= 0.0 && spec.rho <= 1.0))
        throw std::invalid_argument("init_grid: density must be in [0, 1]");

    const std::int64_t count = static_cast<std::int64_t>(spec.n) * spec.n;
    const std::int64_t k = vehicles_per_species(spec.n, spec.rho);

    std::vector<std::int64_t> cells(static_cast<std::size_t>(count));
    std::iota(cells.begin(), cells.end(), std::int64_t{0});

    SplitMix64 rng(spec.seed);
    for (std::int64_t i = count - 1; i > 0; --i) {
        const auto j = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(i + 1)));
        std::swap(cells[static_cast<std::size_t>(i)], cells[static_cast<std::size_t>(j)]);
    }

    Grid g = Grid::with_halo(spec.n);
    for (std::int64_t i = 0; i < 2 * k; ++i) {
        const std::int64_t cell = cells[static_cast<std::size_t>(i)];
        const int r = static_cast<int>(cell / spec.n);
        const int c = static_cast<int>(cell % spec.n);
        g.interior(r, c) = i < k ? Cell::LR : Cell::TB;
    }
    return g;
}

}  // namespace bml

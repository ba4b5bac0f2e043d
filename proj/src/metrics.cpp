#include "bml/metrics.hpp"

#include <numeric>
#include <stdexcept>

namespace bml {

VehicleCounts count_vehicles(const Grid& g) {
    VehicleCounts counts;
    for (int r = 0; r < g.n(); ++r) {
        for (int c = 0; c < g.n(); ++c) {
            const Cell cell = g.interior(r, c);
            counts.lr += cell == Cell::LR;
            counts.tb += cell == Cell::TB;
        }
    }
    return counts;
}

std::int64_t moved_in_phase(const Grid& before, const Grid& after, Phase phase) {
    if (before.n() != after.n())
        throw std::invalid_argument("moved_in_phase: grid size mismatch");
    const Cell species = phase == Phase::Horizontal ? Cell::LR : Cell::TB;
    std::int64_t moved = 0;
    for (int r = 0; r < before.n(); ++r)
        for (int c = 0; c < before.n(); ++c)
            moved += before.interior(r, c) == species && after.interior(r, c) == Cell::Empty;
    return moved;
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::FreeFlow: return "FreeFlow";
        case Regime::Jammed: return "Jammed";
        case Regime::Intermediate: return "Intermediate";
    }
    return "?";
}

Regime classify(std::span<const double> mobility_window) {
    if (mobility_window.empty())
        throw std::invalid_argument("classify: empty mobility history");
    const double mean = std::accumulate(mobility_window.begin(), mobility_window.end(), 0.0) /
                        static_cast<double>(mobility_window.size());
    if (mean >= kFreeFlowThreshold) return Regime::FreeFlow;
    if (mean <= kJammedThreshold) return Regime::Jammed;
    return Regime::Intermediate;
}

}  // namespace bml

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "bml/engine.hpp"
#include "bml/grid.hpp"

namespace bml {

struct VehicleCounts {
    std::int64_t lr = 0;
    std::int64_t tb = 0;
    std::int64_t total() const { return lr + tb; }
    friend bool operator==(const VehicleCounts&, const VehicleCounts&) = default;
};

/// Exact counts over interior cells.
VehicleCounts count_vehicles(const Grid& g);

/// Vehicles that advanced in one phase: interior cells that held the moving
/// species in `before` and are empty in `after`. Throws on size mismatch.
std::int64_t moved_in_phase(const Grid& before, const Grid& after, Phase phase);

struct StepMetrics {
    std::int64_t step = 0;
    std::int64_t lr_count = 0;
    std::int64_t tb_count = 0;
    std::int64_t lr_moved = 0;
    std::int64_t tb_moved = 0;
    double mobility = 0.0;  // (lr_moved + tb_moved) / (lr_count + tb_count); 1 on vacuum
};

enum class Regime { FreeFlow, Jammed, Intermediate };

std::string_view regime_name(Regime r);

inline constexpr double kFreeFlowThreshold = 0.99;
inline constexpr double kJammedThreshold = 0.01;
inline constexpr int kClassifyWindow = 64;  // default history length H

/// Mean mobility over the window: >= 0.99 FreeFlow, <= 0.01 Jammed, else
/// Intermediate. Throws std::invalid_argument on an empty window.
Regime classify(std::span<const double> mobility_window);

}  // namespace bml

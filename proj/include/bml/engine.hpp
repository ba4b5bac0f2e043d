#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string_view>

#include "bml/grid.hpp"

namespace bml {

/// The interchangeable update engines. All four produce bit-identical grids;
/// ScalarNaive is the designated correctness oracle.
enum class Backend {
    ScalarNaive,   // dense n×n grid, wraparound via modulo arithmetic
    ScalarHalo,    // (n+2)×(n+2) grid, ghost ring instead of modulo
    ParallelRows,  // ScalarHalo arithmetic, interior rows split into bands
    Lanes,         // branchless select-and-mask over W adjacent cells
};

enum class Phase { Horizontal, Vertical };

std::string_view backend_name(Backend b);
std::optional<Backend> backend_from_name(std::string_view name);

/// Cells the Lanes backend processes per inner-loop iteration.
int lane_width();

// BML transition rules. A vehicle advances iff its destination is empty in
// the current configuration; everything else stays put.
constexpr Cell horizontal_rule(Cell left, Cell center, Cell right) {
    if (left == Cell::LR && center == Cell::Empty) return Cell::LR;
    if (center == Cell::LR && right == Cell::Empty) return Cell::Empty;
    return center;
}

constexpr Cell vertical_rule(Cell top, Cell center, Cell bottom) {
    if (top == Cell::TB && center == Cell::Empty) return Cell::TB;
    if (center == Cell::TB && bottom == Cell::Empty) return Cell::Empty;
    return center;
}

struct SimConfig {
    int n = 0;
    double rho = 0.0;
    long steps = 0;
    std::uint64_t seed = 0;
    Backend backend = Backend::ScalarHalo;
    int threads = 1;
    long snapshot_every = 0;  // 0 = never
    std::filesystem::path out_dir;
};

/// Throws std::invalid_argument on out-of-range fields.
void validate(const SimConfig& cfg);

/// Double buffer in the layout the backend expects (dense for ScalarNaive,
/// halo otherwise), seeded from `initial`'s interior.
GridPair make_grid_pair(Backend backend, const Grid& initial);

/// One phase: next[r][c] = rule(neighbors from cur) for every interior cell,
/// then cur/next swap. Halo backends require the matching ghost ring to be
/// filled beforehand; the new cur's ghosts are stale afterwards.
/// Throws std::invalid_argument on layout or backend/thread mismatches.
void step_phase(Backend backend, GridPair& pair, Phase phase, int threads = 1);

/// One full step: horizontal then vertical phase, with halo fills where the
/// backend needs them.
void step(Backend backend, GridPair& pair, int threads = 1);

struct StepMetrics;
using StepObserver = std::function<void(const StepMetrics&)>;

/// Advance cfg.steps full steps. With an observer attached, per-step metrics
/// are computed, vehicle conservation is asserted every step, and the
/// observer runs after each step (pair.cur then holds the post-step grid).
/// Without one, only the raw update loop runs, which is what `bench` times.
Grid run(const SimConfig& cfg, GridPair& pair, const StepObserver& observer = {});

namespace detail {
// Scalar row kernel shared by ScalarHalo and ParallelRows (rows are
// interior indices, 1-based, inclusive).
void halo_phase_rows(const Grid& cur, Grid& next, Phase phase, int row_begin, int row_end);
void naive_phase(const Grid& cur, Grid& next, Phase phase);
void lanes_phase(const Grid& cur, Grid& next, Phase phase);
// Portable two-word SWAR formulation of the lane kernel; compiled and tested
// everywhere, selected as the Lanes engine where vector extensions are absent.
void swar_phase(const Grid& cur, Grid& next, Phase phase);
bool lanes_uses_vector_extensions();
}  // namespace detail

}  // namespace bml

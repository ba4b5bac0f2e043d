#include "bml/engine.hpp"

#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bml/metrics.hpp"

// The scalar backends are the performance baselines of the backend ladder;
// keep the optimizer from auto-vectorizing their kernels out from under the
// Lanes comparison. Equivalence stays bit-exact either way.
#if defined(__clang__)
#define BML_SCALAR_KERNEL
#define BML_SCALAR_LOOP _Pragma("clang loop vectorize(disable) interleave(disable)")
#elif defined(__GNUC__)
#define BML_SCALAR_KERNEL __attribute__((noinline, optimize("no-tree-vectorize", "no-tree-slp-vectorize")))
#define BML_SCALAR_LOOP
#else
#define BML_SCALAR_KERNEL
#define BML_SCALAR_LOOP
#endif

namespace bml {

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::ScalarNaive: return "naive";
        case Backend::ScalarHalo: return "halo";
        case Backend::ParallelRows: return "parallel";
        case Backend::Lanes: return "lanes";
    }
    return "?";
}

std::optional<Backend> backend_from_name(std::string_view name) {
    if (name == "naive") return Backend::ScalarNaive;
    if (name == "halo") return Backend::ScalarHalo;
    if (name == "parallel") return Backend::ParallelRows;
    if (name == "lanes") return Backend::Lanes;
    return std::nullopt;
}

void validate(const SimConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("config: n must be >= 1");
    if (!(cfg.rho >= 0.0 && cfg.rho <= 1.0))
        throw std::invalid_argument("config: density must be in [0, 1]");
    if (cfg.steps < 0) throw std::invalid_argument("config: steps must be >= 0");
    if (cfg.threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    if (cfg.snapshot_every < 0)
        throw std::invalid_argument("config: snapshot cadence must be >= 0");
    if (cfg.threads > 1 && cfg.backend != Backend::ParallelRows)
        throw std::invalid_argument(std::string("config: backend '") +
                                    std::string(backend_name(cfg.backend)) +
                                    "' does not support threads > 1");
}

GridPair make_grid_pair(Backend backend, const Grid& initial) {
    Grid cur = backend == Backend::ScalarNaive ? initial.to_dense() : initial.to_halo();
    Grid next = backend == Backend::ScalarNaive ? Grid::dense(initial.n())
                                                : Grid::with_halo(initial.n());
    return GridPair{std::move(cur), std::move(next)};
}

namespace detail {

BML_SCALAR_KERNEL
void halo_phase_rows(const Grid& cur, Grid& next, Phase phase, int row_begin, int row_end) {
    const int n = cur.n();
    const int stride = cur.stride();
    const Cell* src = cur.data();
    Cell* dst = next.data();
    if (phase == Phase::Horizontal) {
        for (int i = row_begin; i <= row_end; ++i) {
            const Cell* row = src + idx(i, 0, stride);
            Cell* out = dst + idx(i, 0, stride);
            BML_SCALAR_LOOP
            for (int j = 1; j <= n; ++j)
                out[j] = horizontal_rule(row[j - 1], row[j], row[j + 1]);
        }
    } else {
        for (int i = row_begin; i <= row_end; ++i) {
            const Cell* up = src + idx(i - 1, 0, stride);
            const Cell* row = src + idx(i, 0, stride);
            const Cell* down = src + idx(i + 1, 0, stride);
            Cell* out = dst + idx(i, 0, stride);
            BML_SCALAR_LOOP
            for (int j = 1; j <= n; ++j) out[j] = vertical_rule(up[j], row[j], down[j]);
        }
    }
}

BML_SCALAR_KERNEL
void naive_phase(const Grid& cur, Grid& next, Phase phase) {
    const int n = cur.n();
    const Cell* src = cur.data();
    Cell* dst = next.data();
    if (phase == Phase::Horizontal) {
        for (int i = 0; i < n; ++i) {
            BML_SCALAR_LOOP
            for (int j = 0; j < n; ++j) {
                const Cell left = src[idx(i, (j - 1 + n) % n, n)];
                const Cell center = src[idx(i, j, n)];
                const Cell right = src[idx(i, (j + 1) % n, n)];
                dst[idx(i, j, n)] = horizontal_rule(left, center, right);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            BML_SCALAR_LOOP
            for (int j = 0; j < n; ++j) {
                const Cell top = src[idx((i - 1 + n) % n, j, n)];
                const Cell center = src[idx(i, j, n)];
                const Cell bottom = src[idx((i + 1) % n, j, n)];
                dst[idx(i, j, n)] = vertical_rule(top, center, bottom);
            }
        }
    }
}

namespace {

// Contiguous bands of ceil(n/threads) interior rows, one worker each.
void parallel_rows_phase(const Grid& cur, Grid& next, Phase phase, int threads) {
    const int n = cur.n();
    if (threads == 1) {
        halo_phase_rows(cur, next, phase, 1, n);
        return;
    }
    const int band = (n + threads - 1) / threads;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        const int begin = 1 + t * band;
        const int end = std::min(n, begin + band - 1);
        if (begin > end) break;
        workers.emplace_back(
            [&cur, &next, phase, begin, end] { halo_phase_rows(cur, next, phase, begin, end); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace

}  // namespace detail

void step_phase(Backend backend, GridPair& pair, Phase phase, int threads) {
    Grid& cur = pair.cur;
    Grid& next = pair.next;
    if (cur.n() != next.n() || cur.stride() != next.stride())
        throw std::invalid_argument("step_phase: cur/next buffers differ in size");
    if (threads < 1) throw std::invalid_argument("step_phase: threads must be >= 1");
    if (threads > 1 && backend != Backend::ParallelRows)
        throw std::invalid_argument(std::string("step_phase: backend '") +
                                    std::string(backend_name(backend)) +
                                    "' does not support threads > 1");
    const bool want_halo = backend != Backend::ScalarNaive;
    if (cur.has_halo() != want_halo)
        throw std::invalid_argument(std::string("step_phase: backend '") +
                                    std::string(backend_name(backend)) +
                                    (want_halo ? "' requires a halo grid" : "' requires a dense grid"));

    switch (backend) {
        case Backend::ScalarNaive:
            detail::naive_phase(cur, next, phase);
            break;
        case Backend::ScalarHalo:
            detail::halo_phase_rows(cur, next, phase, 1, cur.n());
            break;
        case Backend::ParallelRows:
            detail::parallel_rows_phase(cur, next, phase, threads);
            break;
        case Backend::Lanes:
            detail::lanes_phase(cur, next, phase);
            break;
    }
    std::swap(pair.cur, pair.next);
}

namespace {

// Halo fill (when the layout has one) followed by the phase update.
void advance_phase(Backend backend, GridPair& pair, Phase phase, int threads) {
    if (backend != Backend::ScalarNaive) {
        if (phase == Phase::Horizontal)
            pair.cur.fill_horizontal_halo();
        else
            pair.cur.fill_vertical_halo();
    }
    step_phase(backend, pair, phase, threads);
}

}  // namespace

void step(Backend backend, GridPair& pair, int threads) {
    advance_phase(backend, pair, Phase::Horizontal, threads);
    advance_phase(backend, pair, Phase::Vertical, threads);
}

Grid run(const SimConfig& cfg, GridPair& pair, const StepObserver& observer) {
    validate(cfg);
    if (pair.cur.n() != cfg.n)
        throw std::invalid_argument("run: grid size does not match config");

    if (!observer) {
        for (long s = 0; s < cfg.steps; ++s) step(cfg.backend, pair, cfg.threads);
        return pair.cur;
    }

    const VehicleCounts initial = count_vehicles(pair.cur);
    for (long s = 1; s <= cfg.steps; ++s) {
        advance_phase(cfg.backend, pair, Phase::Horizontal, cfg.threads);
        // after the swap, pair.next still holds the pre-phase grid
        const std::int64_t lr_moved = moved_in_phase(pair.next, pair.cur, Phase::Horizontal);
        advance_phase(cfg.backend, pair, Phase::Vertical, cfg.threads);
        const std::int64_t tb_moved = moved_in_phase(pair.next, pair.cur, Phase::Vertical);

        const VehicleCounts counts = count_vehicles(pair.cur);
        if (counts != initial)
            throw std::logic_error("conservation violated at step " + std::to_string(s) +
                                   ": lr " + std::to_string(counts.lr) + "/" +
                                   std::to_string(initial.lr) + ", tb " +
                                   std::to_string(counts.tb) + "/" + std::to_string(initial.tb));

        const std::int64_t total = counts.total();
        observer(StepMetrics{
            .step = s,
            .lr_count = counts.lr,
            .tb_count = counts.tb,
            .lr_moved = lr_moved,
            .tb_moved = tb_moved,
            .mobility = total == 0 ? 1.0 : static_cast<double>(lr_moved + tb_moved) / total,
        });
    }
    return pair.cur;
}

}  // namespace bml

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bml/engine.hpp"
#include "bml/grid.hpp"

namespace bml {

struct NamedGrid {
    std::string name;
    Grid grid;
};

struct GridMismatch {
    std::string a;  // names of the disagreeing runs
    std::string b;
    int row = 0;  // first differing interior cell
    int col = 0;
};

/// Compare every grid against the first; empty result means all bit-identical.
std::optional<GridMismatch> first_mismatch(const std::vector<NamedGrid>& grids);

struct BackendDigest {
    Backend backend = Backend::ScalarNaive;
    std::uint64_t digest = 0;
};

struct VerifyReport {
    std::vector<BackendDigest> digests;
    bool conserved = true;
    std::optional<GridMismatch> mismatch;
    bool ok() const { return conserved && !mismatch.has_value(); }
};

/// Run all four backends from the identical initial grid (per-step
/// conservation asserted) and compare the final grids cell-for-cell.
VerifyReport verify_backends(const SimConfig& cfg);

}  // namespace bml

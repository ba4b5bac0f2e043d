#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bml/cell.hpp"

namespace bml {

/// Row-major linearization of (i, j) for a grid whose rows are `stride` cells long.
constexpr std::size_t idx(std::size_t i, std::size_t j, std::size_t stride) {
    return i * stride + j;
}

/// Square torus domain of n×n cells, stored row-major in a flat buffer.
///
/// Two layouts share this type: a dense grid (stride == n, used by the naive
/// backend) and a halo grid (stride == n+2) whose border ring mirrors the
/// opposite edges so the update kernels need no wraparound arithmetic.
/// Ghost corners are never read and never written by the halo fills.
class Grid {
public:
    Grid() = default;

    static Grid dense(int n);
    static Grid with_halo(int n);

    int n() const { return n_; }
    int stride() const { return stride_; }
    bool has_halo() const { return stride_ == n_ + 2; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }

    Cell* data() { return cells_.data(); }
    const Cell* data() const { return cells_.data(); }

    // Raw buffer coordinates, 0 <= i,j < stride.
    Cell& at(int i, int j) { return cells_[idx(i, j, stride_)]; }
    Cell at(int i, int j) const { return cells_[idx(i, j, stride_)]; }

    // Interior coordinates, 0 <= r,c < n, independent of layout.
    Cell& interior(int r, int c) { return cells_[interior_index(r, c)]; }
    Cell interior(int r, int c) const { return cells_[interior_index(r, c)]; }

    /// Copy interior column n into ghost column 0 and column 1 into ghost
    /// column n+1, for every interior row. Corners untouched.
    void fill_horizontal_halo();

    /// Same for the top/bottom ghost rows. Corners untouched.
    void fill_vertical_halo();

    Grid to_dense() const;
    Grid to_halo() const;

    /// Interior equality; layouts may differ.
    friend bool operator==(const Grid& a, const Grid& b);

private:
    Grid(int n, int stride);
    std::size_t interior_index(int r, int c) const {
        const int off = has_halo() ? 1 : 0;
        return idx(static_cast<std::size_t>(r + off), static_cast<std::size_t>(c + off),
                   static_cast<std::size_t>(stride_));
    }

    int n_ = 0;
    int stride_ = 0;
    std::vector<Cell> cells_;
};

/// Double buffer for synchronous updates: read cur, write next, swap.
struct GridPair {
    Grid cur;
    Grid next;
};

/// Interior coordinates (r, c) of the first differing cell, if any.
std::optional<std::pair<int, int>> first_interior_mismatch(const Grid& a, const Grid& b);

/// Parse the text fixture format: n lines of n characters from {'.', '>', 'v'}.
/// Returns a halo-layout grid with ghosts zeroed. Throws std::invalid_argument
/// naming line and column on ragged lines, illegal characters, or empty input.
Grid parse_grid(std::string_view text);

/// Inverse of parse_grid over the interior; every row newline-terminated.
std::string render_grid(const Grid& g);

}  // namespace bml

#include "bml/grid.hpp"

#include <stdexcept>
#include <string>

namespace bml {

Grid::Grid(int n, int stride)
    : n_(n), stride_(stride), cells_(static_cast<std::size_t>(stride) * stride, Cell::Empty) {}

Grid Grid::dense(int n) {
    if (n < 1) throw std::invalid_argument("grid side must be >= 1");
    return Grid(n, n);
}

Grid Grid::with_halo(int n) {
    if (n < 1) throw std::invalid_argument("grid side must be >= 1");
    return Grid(n, n + 2);
}

void Grid::fill_horizontal_halo() {
    if (!has_halo()) throw std::logic_error("fill_horizontal_halo: grid has no halo");
    for (int i = 1; i <= n_; ++i) {
        at(i, 0) = at(i, n_);
        at(i, n_ + 1) = at(i, 1);
    }
}

void Grid::fill_vertical_halo() {
    if (!has_halo()) throw std::logic_error("fill_vertical_halo: grid has no halo");
    for (int j = 1; j <= n_; ++j) {
        at(0, j) = at(n_, j);
        at(n_ + 1, j) = at(1, j);
    }
}

Grid Grid::to_dense() const {
    Grid out = Grid::dense(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out.interior(r, c) = interior(r, c);
    return out;
}

Grid Grid::to_halo() const {
    Grid out = Grid::with_halo(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out.interior(r, c) = interior(r, c);
    return out;
}

bool operator==(const Grid& a, const Grid& b) {
    if (a.n_ != b.n_) return false;
    return !first_interior_mismatch(a, b).has_value();
}

std::optional<std::pair<int, int>> first_interior_mismatch(const Grid& a, const Grid& b) {
    if (a.n() != b.n()) throw std::invalid_argument("grid size mismatch");
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c)
            if (a.interior(r, c) != b.interior(r, c)) return std::make_pair(r, c);
    return std::nullopt;
}

Grid parse_grid(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);  // final newline optional
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    if (lines.empty() || (lines.size() == 1 && lines[0].empty()))
        throw std::invalid_argument("parse_grid: empty input");

    const std::size_t n = lines.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (lines[i].size() != n)
            throw std::invalid_argument("parse_grid: line " + std::to_string(i + 1) + " has " +
                                        std::to_string(lines[i].size()) + " columns, expected " +
                                        std::to_string(n) + " (grid must be square)");
    }

    Grid g = Grid::with_halo(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto cell = cell_from_char(lines[i][j]);
            if (!cell)
                throw std::invalid_argument("parse_grid: illegal character '" +
                                            std::string(1, lines[i][j]) + "' at line " +
                                            std::to_string(i + 1) + ", column " +
                                            std::to_string(j + 1));
            g.interior(static_cast<int>(i), static_cast<int>(j)) = *cell;
        }
    }
    return g;
}

std::string render_grid(const Grid& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(g.n()) * (g.n() + 1));
    for (int r = 0; r < g.n(); ++r) {
        for (int c = 0; c < g.n(); ++c) out.push_back(to_char(g.interior(r, c)));
        out.push_back('\n');
    }
    return out;
}

}  // namespace bml

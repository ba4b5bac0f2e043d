#include "bml/snapshot.hpp"

#include <cstring>
#include <fstream>
#include <string>

namespace bml {

namespace {

Rgb cell_color(Cell c) {
    switch (c) {
        case Cell::LR: return kLrColor;
        case Cell::TB: return kTbColor;
        default: return kEmptyColor;
    }
}

}  // namespace

std::vector<std::uint8_t> encode_ppm(const Grid& g) {
    const std::string header =
        "P6\n" + std::to_string(g.n()) + " " + std::to_string(g.n()) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + 3u * static_cast<std::size_t>(g.n()) * g.n());
    out.insert(out.end(), header.begin(), header.end());
    for (int r = 0; r < g.n(); ++r) {
        for (int c = 0; c < g.n(); ++c) {
            const Rgb px = cell_color(g.interior(r, c));
            out.push_back(px.r);
            out.push_back(px.g);
            out.push_back(px.b);
        }
    }
    return out;
}

void write_ppm(const Grid& g, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = encode_ppm(g);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::runtime_error("write_ppm: cannot open '" + path.string() +
                                 "': " + std::strerror(errno));
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    if (!file)
        throw std::runtime_error("write_ppm: write failed for '" + path.string() +
                                 "': " + std::strerror(errno));
}

}  // namespace bml

#include <stdexcept>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "bml/seeding.hpp"
#include "bml/snapshot.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bml;

namespace {

// test-only decoder, independent of the encoder
struct DecodedPpm {
    int n = 0;
    std::vector<Rgb> pixels;
};

DecodedPpm decode_ppm(const std::vector<std::uint8_t>& bytes) {
    DecodedPpm out;
    int w = 0, h = 0, maxval = 0, consumed = 0;
    REQUIRE(std::sscanf(reinterpret_cast<const char*>(bytes.data()), "P6\n%d %d\n%d\n%n", &w, &h,
                        &maxval, &consumed) == 3);
    REQUIRE(w == h);
    REQUIRE(maxval == 255);
    out.n = w;
    REQUIRE(bytes.size() == static_cast<std::size_t>(consumed) + 3u * w * h);
    for (std::size_t p = static_cast<std::size_t>(consumed); p + 2 < bytes.size(); p += 3)
        out.pixels.push_back(Rgb{bytes[p], bytes[p + 1], bytes[p + 2]});
    return out;
}

Cell cell_of(Rgb px) {
    if (px.r == 255 && px.g == 0 && px.b == 0) return Cell::LR;
    if (px.r == 0 && px.g == 0 && px.b == 255) return Cell::TB;
    REQUIRE((px.r == 255 && px.g == 255 && px.b == 255));
    return Cell::Empty;
}

}  // namespace

TEST_CASE("1x1 empty grid encodes to 11 header bytes + one white pixel") {
    const std::vector<std::uint8_t> bytes = encode_ppm(parse_grid("."));
    const std::vector<std::uint8_t> expected = {'P', '6', '\n', '1', ' ',  '1',  '\n',
                                                '2', '5', '5',  '\n', 255, 255, 255};
    CHECK(bytes == expected);
    CHECK(bytes.size() == 14);
}

TEST_CASE("vehicle pixels follow the color convention") {
    const auto lr = decode_ppm(encode_ppm(parse_grid(">")));
    CHECK(lr.pixels[0].r == 255);
    CHECK(lr.pixels[0].g == 0);
    CHECK(lr.pixels[0].b == 0);

    const auto tb = decode_ppm(encode_ppm(parse_grid("v")));
    CHECK(tb.pixels[0].r == 0);
    CHECK(tb.pixels[0].g == 0);
    CHECK(tb.pixels[0].b == 255);
}

TEST_CASE("encode/decode reproduces the grid; size is header + 3n^2") {
    SplitMix64 rng(606);
    for (int n : {1, 2, 9, 17, 40}) {
        const Grid g = test::random_halo_grid(rng, n);
        const auto bytes = encode_ppm(g);

        const std::size_t header =
            4 + 2 * std::to_string(n).size() + 1 + 4;  // "P6\n" + "<n> <n>\n" + "255\n"
        CHECK(bytes.size() == header + 3u * n * n);

        const DecodedPpm decoded = decode_ppm(bytes);
        REQUIRE(decoded.n == n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                CHECK(cell_of(decoded.pixels[static_cast<std::size_t>(r) * n + c]) ==
                      g.interior(r, c));
    }
}

TEST_CASE("write_ppm writes the encoded bytes; failures name the path") {
    const Grid g = parse_grid(">v\n..");
    const auto path = std::filesystem::temp_directory_path() / "bml_snapshot_test.ppm";
    write_ppm(g, path);
    std::ifstream in(path, std::ios::binary);
    const std::vector<std::uint8_t> on_disk((std::istreambuf_iterator<char>(in)),
                                            std::istreambuf_iterator<char>());
    CHECK(on_disk == encode_ppm(g));
    std::filesystem::remove(path);

    try {
        write_ppm(g, "/nonexistent-dir/x.ppm");
        FAIL("expected std::runtime_error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent-dir/x.ppm") != std::string::npos);
    }
}

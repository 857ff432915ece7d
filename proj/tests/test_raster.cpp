#include <doctest.h>

#include <random>

#include "pixelseal/errors.hpp"
#include "pixelseal/raster.hpp"
#include "support/fixtures.hpp"

using namespace pixelseal;

TEST_CASE("ByteGrid validates its construction") {
    CHECK_THROWS_AS(ByteGrid(0, 4, 0), DimensionError);
    CHECK_THROWS_AS(ByteGrid(4, -1, 0), DimensionError);
    CHECK_THROWS_AS(ByteGrid(2, 2, std::vector<std::uint8_t>{1, 2, 3}),
                    DimensionError);

    const ByteGrid grid(3, 2, 7);
    CHECK(grid.size() == 6);
    CHECK(grid.at(2, 1) == 7);
}

TEST_CASE("1x1 pixel splits into single-entry planes") {
    const InterleavedRaster raster{1, 1, 3, {10, 20, 30}};
    const ImagePlanes planes = split_planes(raster);
    CHECK(planes.red[0] == 10);
    CHECK(planes.green[0] == 20);
    CHECK(planes.blue[0] == 30);
}

TEST_CASE("2x2 split matches the hand-enumerated table") {
    // Scan order (0,0) (1,0) (0,1) (1,1); per-pixel triples below.
    const InterleavedRaster raster{2, 2, 3,
                                   {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}};
    const ImagePlanes planes = split_planes(raster);
    CHECK(planes.red.data() == std::vector<std::uint8_t>{1, 4, 7, 10});
    CHECK(planes.green.data() == std::vector<std::uint8_t>{2, 5, 8, 11});
    CHECK(planes.blue.data() == std::vector<std::uint8_t>{3, 6, 9, 12});

    // Remerging those planes restores the raster.
    const ImagePlanes merged =
        merge_planes(planes.red, planes.green, planes.blue);
    CHECK(interleave(merged).data == raster.data);
}

TEST_CASE("split and merge are mutually inverse") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const int w = 1 + static_cast<int>(rng() % 40);
        const int h = 1 + static_cast<int>(rng() % 40);
        InterleavedRaster raster{w, h, 3, {}};
        raster.data.resize(static_cast<std::size_t>(w) * h * 3);
        for (auto& b : raster.data) b = static_cast<std::uint8_t>(rng());

        const ImagePlanes planes = split_planes(raster);
        const InterleavedRaster back = interleave(planes);
        CHECK(back.width == w);
        CHECK(back.height == h);
        CHECK(back.data == raster.data);
    }
}

TEST_CASE("all-zero planes merge to a black image") {
    const ImagePlanes black =
        merge_planes(ByteGrid(4, 4, 0), ByteGrid(4, 4, 0), ByteGrid(4, 4, 0));
    const InterleavedRaster raster = interleave(black);
    for (std::uint8_t b : raster.data) CHECK(b == 0);
}

TEST_CASE("bad inputs are rejected") {
    CHECK_THROWS_AS(split_planes(InterleavedRaster{1, 1, 4, {1, 2, 3, 4}}),
                    UnsupportedFormatError);
    CHECK_THROWS_AS(split_planes(InterleavedRaster{2, 2, 3, {1, 2, 3}}),
                    DimensionError);
    CHECK_THROWS_AS(
        merge_planes(ByteGrid(2, 2, 0), ByteGrid(2, 2, 0), ByteGrid(2, 3, 0)),
        DimensionError);
}

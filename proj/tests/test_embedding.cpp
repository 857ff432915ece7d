#include <doctest.h>

#include <random>

#include "pixelseal/embedding.hpp"
#include "pixelseal/errors.hpp"
#include "support/fixtures.hpp"

using namespace pixelseal;
using pixelseal::testing::random_grid;

TEST_CASE("BitPlaneIndex validation and presets") {
    CHECK(BitPlaneIndex(0).value() == 0);
    CHECK(BitPlaneIndex(7).value() == 7);
    CHECK_THROWS_AS(BitPlaneIndex(-1), InvalidArgumentError);
    CHECK_THROWS_AS(BitPlaneIndex(8), InvalidArgumentError);

    CHECK(BitPlaneIndex::lsb().value() == 0);
    CHECK(BitPlaneIndex::fourth().value() == 3);
    CHECK(BitPlaneIndex::msb().value() == 7);

    CHECK(BitPlaneIndex::parse("5").value() == 5);
    CHECK(BitPlaneIndex::parse("lsb").value() == 0);
    CHECK(BitPlaneIndex::parse("fourth").value() == 3);
    CHECK(BitPlaneIndex::parse("msb").value() == 7);
    CHECK_THROWS_AS(BitPlaneIndex::parse("8"), InvalidArgumentError);
    CHECK_THROWS_AS(BitPlaneIndex::parse("first"), InvalidArgumentError);
    CHECK_THROWS_AS(BitPlaneIndex::parse(""), InvalidArgumentError);
}

TEST_CASE("bit substitution on single pixels") {
    // 178 = 10110010b
    ByteGrid red(1, 1, std::vector<std::uint8_t>{178});
    ByteGrid cipher_ones(1, 1, std::vector<std::uint8_t>{0xFF});

    CHECK(embed_plane(red, cipher_ones, BitPlaneIndex(0))[0] == 179);
    CHECK(embed_plane(red, cipher_ones, BitPlaneIndex(2))[0] == 182);  // 10110110b

    // Cipher bit already equal to the red bit: fixed point.
    ByteGrid cipher_same(1, 1, std::vector<std::uint8_t>{178});
    for (int p = 0; p < 8; ++p) {
        CHECK(embed_plane(red, cipher_same, BitPlaneIndex(p))[0] == 178);
    }
}

TEST_CASE("embedding touches only bit p") {
    std::mt19937 rng(17);
    const ByteGrid red = random_grid(31, 17, rng);
    const ByteGrid cipher = random_grid(31, 17, rng);
    for (int p = 0; p < 8; ++p) {
        const ByteGrid out = embed_plane(red, cipher, BitPlaneIndex(p));
        for (std::size_t i = 0; i < out.size(); ++i) {
            const std::uint8_t diff = out[i] ^ red[i];
            CHECK((diff == 0 || diff == (1u << p)));
        }
    }
}

TEST_CASE("extract recovers the embedded plane") {
    std::mt19937 rng(19);
    const ByteGrid red = random_grid(23, 9, rng);
    const ByteGrid cipher = random_grid(23, 9, rng);
    for (int p = 0; p < 8; ++p) {
        const ByteGrid bits =
            extract_plane(embed_plane(red, cipher, BitPlaneIndex(p)),
                          BitPlaneIndex(p));
        for (std::size_t i = 0; i < bits.size(); ++i) {
            CHECK(bits[i] == ((cipher[i] >> p) & 1u));
        }
    }
}

TEST_CASE("extract_plane matches a per-pixel shift-and-mask loop") {
    std::mt19937 rng(23);
    const ByteGrid grid = random_grid(64, 64, rng);
    const ByteGrid bits = extract_plane(grid, BitPlaneIndex(5));
    for (int y = 0; y < 64; ++y) {
        for (int x = 0; x < 64; ++x) {
            CHECK(bits.at(x, y) == ((grid.at(x, y) >> 5) & 1));
        }
    }

    const ByteGrid zeros(8, 8, 0);
    for (int p = 0; p < 8; ++p) {
        CHECK(extract_plane(zeros, BitPlaneIndex(p)) == zeros);
    }
}

TEST_CASE("uniform cipher bits flip about half the pixels") {
    std::mt19937 rng(29);
    const ByteGrid red = random_grid(400, 300, rng);  // 120000 pixels
    const ByteGrid cipher = random_grid(400, 300, rng);
    for (int p : {0, 3, 7}) {
        const ByteGrid out = embed_plane(red, cipher, BitPlaneIndex(p));
        std::size_t flips = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            flips += out[i] != red[i] ? 1 : 0;
        }
        const double rate = static_cast<double>(flips) / out.size();
        CHECK(rate == doctest::Approx(0.5).epsilon(0.02));  // 0.5 +- 0.01
    }
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(
        embed_plane(ByteGrid(2, 2, 0), ByteGrid(2, 3, 0), BitPlaneIndex(0)),
        DimensionError);
}

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "pixelseal/raster.hpp"

namespace pixelseal::testing {

/// Bounded draw from raw engine output. uniform_int_distribution is
/// implementation-defined, so tests that freeze values roll their own.
inline std::uint32_t bounded(std::mt19937& rng, std::uint32_t n) {
    const std::uint32_t limit = std::mt19937::max() - std::mt19937::max() % n;
    std::uint32_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

inline ByteGrid random_grid(int width, int height, std::mt19937& rng) {
    ByteGrid grid(width, height);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = static_cast<std::uint8_t>(rng() & 0xFF);
    }
    return grid;
}

/// Uniform-noise RGB image.
inline ImagePlanes random_image(int width, int height, std::uint32_t seed) {
    std::mt19937 rng(seed);
    return ImagePlanes{random_grid(width, height, rng),
                       random_grid(width, height, rng),
                       random_grid(width, height, rng)};
}

/// Smooth low-frequency content plus mild noise: stands in for a natural
/// photo. The noise keeps 4x4 blocks distinct, which matters for anything
/// leaning on the codebook property.
inline ImagePlanes natural_image(int width, int height, std::uint32_t seed) {
    std::mt19937 rng(seed);
    ImagePlanes out{ByteGrid(width, height), ByteGrid(width, height),
                    ByteGrid(width, height)};
    ByteGrid* planes[3] = {&out.red, &out.green, &out.blue};
    for (int c = 0; c < 3; ++c) {
        const double fx = 1.0 + bounded(rng, 4);
        const double fy = 1.0 + bounded(rng, 4);
        const double phase1 = bounded(rng, 628) / 100.0;
        const double phase2 = bounded(rng, 628) / 100.0;
        const double base = 90.0 + bounded(rng, 60);
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                const double wave =
                    55.0 * std::sin(2.0 * M_PI * fx * x / width + phase1) *
                        std::cos(2.0 * M_PI * fy * y / height + phase2) +
                    25.0 * std::sin(2.0 * M_PI * (x + y) / 97.0 + phase2);
                const double noise = static_cast<double>(bounded(rng, 21)) - 10.0;
                double value = base + wave + noise;
                if (value < 0.0) value = 0.0;
                if (value > 255.0) value = 255.0;
                planes[c]->at(x, y) = static_cast<std::uint8_t>(value + 0.5);
            }
        }
    }
    return out;
}

}  // namespace pixelseal::testing

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pixelseal/blockcipher.hpp"
#include "pixelseal/embedding.hpp"
#include "pixelseal/keying.hpp"
#include "pixelseal/raster.hpp"

namespace pixelseal {

/// Result of the protect pipeline: the original image with the cipher bit
/// plane substituted into red. Green/blue are byte-identical to the source.
struct ProtectedImage {
    ImagePlanes planes;
    BitPlaneIndex plane_index;
    /// First 4 SOI bytes. Operator convenience only; never embedded in pixels.
    std::array<std::uint8_t, 4> soi_fingerprint{};
};

/// Per-block verdicts from recompute-and-compare verification.
struct TamperReport {
    int width = 0;
    int height = 0;
    int plane = 0;
    int blocks_x = 0;
    int blocks_y = 0;
    /// Row-major per-block count of mismatching bits (0-16; edge blocks
    /// compare only in-bounds pixels). A block is tampered iff count >= 1.
    std::vector<std::uint8_t> mismatch_counts;
    int total_tampered = 0;
    double tampered_fraction = 0.0;
    std::array<std::uint8_t, 4> soi_fingerprint{};

    bool tampered(int bx, int by) const {
        return mismatch_counts[static_cast<std::size_t>(by) * blocks_x + bx] > 0;
    }
};

/// Full protect pipeline: key from camera id, cipher matrix from G xor B,
/// bit-plane substitution into red, planes remerged.
ProtectedImage protect(const ImagePlanes& image,
                       std::span<const std::uint8_t> camera_id, BitPlaneIndex p);

/// Recompute the cipher matrix from the image's G/B planes and compare its
/// bit plane p against the red plane, aggregated per 4x4 block. Wrong keys
/// or tampered content produce mismatches, never errors.
TamperReport verify(const ImagePlanes& image,
                    std::span<const std::uint8_t> camera_id, BitPlaneIndex p);

/// Copy of `base` with every tampered block painted in a saturated marker
/// color. Clean blocks are untouched. Throws DimensionError when the report
/// grid does not match the image.
ImagePlanes render_tamper_map(const TamperReport& report, const ImagePlanes& base);

}  // namespace pixelseal

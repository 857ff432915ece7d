#include "pixelseal/protection.hpp"

#include <algorithm>

#include "pixelseal/errors.hpp"

namespace pixelseal {

namespace {

std::array<std::uint8_t, 4> fingerprint_bytes(const SecretOriginalityIdentifier& soi) {
    std::array<std::uint8_t, 4> fp;
    std::copy_n(soi.digest.begin(), fp.size(), fp.begin());
    return fp;
}

}  // namespace

ProtectedImage protect(const ImagePlanes& image,
                       std::span<const std::uint8_t> camera_id, BitPlaneIndex p) {
    const SecretOriginalityIdentifier soi = derive_soi(camera_id);
    const CipherKey key = derive_key(soi);
    const ByteGrid cipher = encrypt_grid(xor_planes(image.green, image.blue), key);
    ByteGrid modified = embed_plane(image.red, cipher, p);
    return ProtectedImage{
        merge_planes(std::move(modified), image.green, image.blue), p,
        fingerprint_bytes(soi)};
}

TamperReport verify(const ImagePlanes& image,
                    std::span<const std::uint8_t> camera_id, BitPlaneIndex p) {
    const SecretOriginalityIdentifier soi = derive_soi(camera_id);
    const CipherKey key = derive_key(soi);
    const ByteGrid cipher = encrypt_grid(xor_planes(image.green, image.blue), key);

    const BlockGrid grid = block_grid_for(image.width(), image.height());
    TamperReport report;
    report.width = image.width();
    report.height = image.height();
    report.plane = p.value();
    report.blocks_x = grid.blocks_x;
    report.blocks_y = grid.blocks_y;
    report.mismatch_counts.assign(static_cast<std::size_t>(grid.count()), 0);
    report.soi_fingerprint = fingerprint_bytes(soi);

    const std::uint8_t mask = p.mask();
    for (int y = 0; y < image.height(); ++y) {
        const int by = y / BlockGrid::kBlockSide;
        for (int x = 0; x < image.width(); ++x) {
            if (((image.red.at(x, y) ^ cipher.at(x, y)) & mask) != 0) {
                const int bx = x / BlockGrid::kBlockSide;
                ++report.mismatch_counts[grid.index(bx, by)];
            }
        }
    }

    for (std::uint8_t count : report.mismatch_counts) {
        if (count > 0) ++report.total_tampered;
    }
    report.tampered_fraction =
        static_cast<double>(report.total_tampered) / grid.count();
    return report;
}

ImagePlanes render_tamper_map(const TamperReport& report, const ImagePlanes& base) {
    const BlockGrid grid = block_grid_for(base.width(), base.height());
    if (grid.blocks_x != report.blocks_x || grid.blocks_y != report.blocks_y ||
        report.width != base.width() || report.height != base.height()) {
        throw DimensionError("render_tamper_map: report grid does not match image");
    }

    // Saturated magenta marker.
    constexpr std::uint8_t kMarkerR = 255, kMarkerG = 0, kMarkerB = 255;

    ImagePlanes out = base;
    for (int by = 0; by < report.blocks_y; ++by) {
        for (int bx = 0; bx < report.blocks_x; ++bx) {
            if (!report.tampered(bx, by)) continue;
            const int x0 = bx * BlockGrid::kBlockSide;
            const int y0 = by * BlockGrid::kBlockSide;
            const int x1 = std::min(x0 + BlockGrid::kBlockSide, base.width());
            const int y1 = std::min(y0 + BlockGrid::kBlockSide, base.height());
            for (int y = y0; y < y1; ++y) {
                for (int x = x0; x < x1; ++x) {
                    out.red.at(x, y) = kMarkerR;
                    out.green.at(x, y) = kMarkerG;
                    out.blue.at(x, y) = kMarkerB;
                }
            }
        }
    }
    return out;
}

}  // namespace pixelseal

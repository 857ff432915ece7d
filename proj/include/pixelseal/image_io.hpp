#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pixelseal/raster.hpp"

namespace pixelseal {

/// What load_image found along the way. `alpha_stripped` flags an input
/// whose alpha channel was discarded; callers surface the warning.
struct LoadInfo {
    std::string format;  ///< "png", "jpeg", or "bmp"
    bool alpha_stripped = false;
};

/// Decode a PNG, BMP, or JPEG file into planes. The format is sniffed from
/// the file's magic bytes, not its extension. 16-bit depth, grayscale, and
/// anything but 8-bit color are rejected with UnsupportedFormatError;
/// undecodable files raise DecodeError; filesystem failures raise IoError.
ImagePlanes load_image(const std::filesystem::path& path, LoadInfo* info = nullptr);

/// Write planes as an 8-bit RGB PNG. The path must end in ".png" (any case):
/// output is always lossless because the embedded bit plane would not
/// survive lossy re-encoding. Throws InvalidArgumentError otherwise.
void store_image(const ImagePlanes& planes, const std::filesystem::path& path);

/// In-memory JPEG codec, used by the recompression attack and the JPEG
/// load path.
std::vector<std::uint8_t> encode_jpeg(const ImagePlanes& planes, int quality);
ImagePlanes decode_jpeg(std::span<const std::uint8_t> bytes);

}  // namespace pixelseal

#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "pixelseal/errors.hpp"

namespace pixelseal {

/// Row-major grid of width*height bytes. Holds a single color plane, the
/// XOR matrix, or the cipher matrix.
class ByteGrid {
public:
    ByteGrid() = default;

    ByteGrid(int width, int height, std::uint8_t fill = 0);

    /// Takes ownership of `data`; throws DimensionError unless
    /// data.size() == width*height.
    ByteGrid(int width, int height, std::vector<std::uint8_t> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    std::uint8_t at(int x, int y) const {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        return data_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::uint8_t& at(int x, int y) {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        return data_[static_cast<std::size_t>(y) * width_ + x];
    }

    std::uint8_t operator[](std::size_t i) const { return data_[i]; }
    std::uint8_t& operator[](std::size_t i) { return data_[i]; }

    std::span<const std::uint8_t> bytes() const noexcept { return data_; }
    std::vector<std::uint8_t>& data() noexcept { return data_; }
    const std::vector<std::uint8_t>& data() const noexcept { return data_; }

    bool same_size(const ByteGrid& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const ByteGrid&, const ByteGrid&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> data_;
};

/// An RGB raster as three equal-size 8-bit planes.
struct ImagePlanes {
    ByteGrid red;
    ByteGrid green;
    ByteGrid blue;

    int width() const noexcept { return red.width(); }
    int height() const noexcept { return red.height(); }

    friend bool operator==(const ImagePlanes&, const ImagePlanes&) = default;
};

/// Interleaved raster as produced by file decoders: `channels` bytes per
/// pixel, rows packed tightly.
struct InterleavedRaster {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;
};

/// Separate an interleaved 3-channel 8-bit raster into planes.
/// Throws UnsupportedFormatError for other channel counts, DimensionError
/// when the buffer length does not match.
ImagePlanes split_planes(const InterleavedRaster& raster);

/// Assemble three planes into an ImagePlanes, validating that all three
/// share the same dimensions. Throws DimensionError otherwise.
ImagePlanes merge_planes(ByteGrid red, ByteGrid green, ByteGrid blue);

/// Inverse of split_planes: pack planes back into interleaved RGB.
InterleavedRaster interleave(const ImagePlanes& planes);

}  // namespace pixelseal

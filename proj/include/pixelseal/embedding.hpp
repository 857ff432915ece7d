#pragma once

#include <cstdint>
#include <string_view>

#include "pixelseal/raster.hpp"

namespace pixelseal {

/// Which bit of each red byte carries the cipher bit. 0 = least significant.
class BitPlaneIndex {
public:
    /// Throws InvalidArgumentError unless 0 <= index <= 7.
    explicit BitPlaneIndex(int index);

    int value() const noexcept { return index_; }
    std::uint8_t mask() const noexcept {
        return static_cast<std::uint8_t>(1u << index_);
    }

    static BitPlaneIndex lsb() { return BitPlaneIndex(0); }
    static BitPlaneIndex fourth() { return BitPlaneIndex(3); }
    static BitPlaneIndex msb() { return BitPlaneIndex(7); }

    /// Accepts "0".."7" or the named presets "lsb", "fourth", "msb".
    static BitPlaneIndex parse(std::string_view spec);

    friend bool operator==(const BitPlaneIndex&, const BitPlaneIndex&) = default;

private:
    int index_;
};

/// Replace bit p of every red byte with bit p of the corresponding cipher
/// byte (the modified matrix). All other bits are untouched, so
/// |out[i] - red[i]| is 0 or 2^p. Throws DimensionError on size mismatch.
ByteGrid embed_plane(const ByteGrid& red, const ByteGrid& cipher, BitPlaneIndex p);

/// Bit p of every byte, as a grid of 0/1 values.
ByteGrid extract_plane(const ByteGrid& modified, BitPlaneIndex p);

}  // namespace pixelseal

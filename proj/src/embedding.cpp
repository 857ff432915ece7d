#include "pixelseal/embedding.hpp"

#include <string>

#include "pixelseal/errors.hpp"

namespace pixelseal {

BitPlaneIndex::BitPlaneIndex(int index) : index_(index) {
    if (index < 0 || index > 7) {
        throw InvalidArgumentError("bit plane index must be in [0,7], got " +
                                   std::to_string(index));
    }
}

BitPlaneIndex BitPlaneIndex::parse(std::string_view spec) {
    if (spec == "lsb") return lsb();
    if (spec == "fourth") return fourth();
    if (spec == "msb") return msb();
    if (spec.size() == 1 && spec[0] >= '0' && spec[0] <= '7') {
        return BitPlaneIndex(spec[0] - '0');
    }
    throw InvalidArgumentError("bad bit plane spec '" + std::string(spec) +
                               "' (expected 0-7, lsb, fourth, or msb)");
}

ByteGrid embed_plane(const ByteGrid& red, const ByteGrid& cipher, BitPlaneIndex p) {
    if (!red.same_size(cipher)) {
        throw DimensionError("embed_plane: red and cipher grids differ in size");
    }
    const std::uint8_t mask = p.mask();
    std::vector<std::uint8_t> out(red.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((red[i] & ~mask) | (cipher[i] & mask));
    }
    return ByteGrid(red.width(), red.height(), std::move(out));
}

ByteGrid extract_plane(const ByteGrid& modified, BitPlaneIndex p) {
    const int shift = p.value();
    std::vector<std::uint8_t> out(modified.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((modified[i] >> shift) & 1u);
    }
    return ByteGrid(modified.width(), modified.height(), std::move(out));
}

}  // namespace pixelseal

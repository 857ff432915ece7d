#pragma once

#include "pixelseal/keying.hpp"
#include "pixelseal/raster.hpp"

namespace pixelseal {

/// 4x4-pixel block tiling of a grid. Edge blocks may extend past the grid;
/// out-of-bounds bytes are zero-padded for encryption and skipped by
/// comparisons. Block indices are row-major over (block_row, block_col).
struct BlockGrid {
    static constexpr int kBlockSide = 4;
    static constexpr int kBlockBytes = 16;

    int blocks_x = 0;
    int blocks_y = 0;

    int count() const noexcept { return blocks_x * blocks_y; }
    int index(int bx, int by) const noexcept { return by * blocks_x + bx; }
};

BlockGrid block_grid_for(int width, int height);

/// Per-byte XOR of two equal-size grids. Throws DimensionError on mismatch.
ByteGrid xor_planes(const ByteGrid& g, const ByteGrid& b);

/// Encrypt a grid in independent 4x4 blocks (codebook style), producing the
/// cipher matrix.
///
/// The grid is zero-padded to whole blocks; each block is serialized
/// row-major within the block, encrypted on its own, written back, and the
/// result is cropped to the original size. Block independence is what makes
/// per-block tamper localization possible. Throws InvalidArgumentError on an
/// empty grid.
ByteGrid encrypt_grid(const ByteGrid& x, const CipherKey& key);

}  // namespace pixelseal

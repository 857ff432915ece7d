#include "pixelseal/blockcipher.hpp"

#include <array>

#include "pixelseal/aes128.hpp"
#include "pixelseal/errors.hpp"

namespace pixelseal {

BlockGrid block_grid_for(int width, int height) {
    BlockGrid grid;
    grid.blocks_x = (width + BlockGrid::kBlockSide - 1) / BlockGrid::kBlockSide;
    grid.blocks_y = (height + BlockGrid::kBlockSide - 1) / BlockGrid::kBlockSide;
    return grid;
}

ByteGrid xor_planes(const ByteGrid& g, const ByteGrid& b) {
    if (!g.same_size(b)) {
        throw DimensionError("xor_planes: grids differ in size");
    }
    std::vector<std::uint8_t> out(g.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = g[i] ^ b[i];
    }
    return ByteGrid(g.width(), g.height(), std::move(out));
}

ByteGrid encrypt_grid(const ByteGrid& x, const CipherKey& key) {
    if (x.empty()) {
        throw InvalidArgumentError("encrypt_grid: empty grid");
    }
    constexpr int side = BlockGrid::kBlockSide;
    const BlockGrid grid = block_grid_for(x.width(), x.height());
    const Aes128 aes(key);

    ByteGrid out(x.width(), x.height());
    std::array<std::uint8_t, BlockGrid::kBlockBytes> plain{};
    std::array<std::uint8_t, BlockGrid::kBlockBytes> cipher{};

    for (int by = 0; by < grid.blocks_y; ++by) {
        for (int bx = 0; bx < grid.blocks_x; ++bx) {
            // Serialize the block row-major; out-of-bounds bytes are zero.
            plain.fill(0);
            for (int i = 0; i < side; ++i) {
                const int y = by * side + i;
                if (y >= x.height()) break;
                for (int j = 0; j < side; ++j) {
                    const int xx = bx * side + j;
                    if (xx >= x.width()) break;
                    plain[i * side + j] = x.at(xx, y);
                }
            }
            aes.encrypt_block(plain, cipher);
            // Write back only the in-bounds bytes.
            for (int i = 0; i < side; ++i) {
                const int y = by * side + i;
                if (y >= x.height()) break;
                for (int j = 0; j < side; ++j) {
                    const int xx = bx * side + j;
                    if (xx >= x.width()) break;
                    out.at(xx, y) = cipher[i * side + j];
                }
            }
        }
    }
    return out;
}

}  // namespace pixelseal

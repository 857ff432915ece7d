#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "pixelseal/keying.hpp"

namespace pixelseal {

/// AES-128 block transform (FIPS 197). Encrypts and decrypts single
/// 16-byte blocks; modes of operation live with the callers.
class Aes128 {
public:
    static constexpr std::size_t kBlockSize = 16;

    explicit Aes128(const CipherKey& key);

    void encrypt_block(std::span<const std::uint8_t, kBlockSize> in,
                       std::span<std::uint8_t, kBlockSize> out) const;
    void decrypt_block(std::span<const std::uint8_t, kBlockSize> in,
                       std::span<std::uint8_t, kBlockSize> out) const;

    std::array<std::uint8_t, kBlockSize> encrypt_block(
        std::span<const std::uint8_t, kBlockSize> in) const;
    std::array<std::uint8_t, kBlockSize> decrypt_block(
        std::span<const std::uint8_t, kBlockSize> in) const;

private:
    static constexpr int kRounds = 10;
    // Round keys in block layout: 16 bytes per round key, 11 round keys.
    std::array<std::uint8_t, kBlockSize*(kRounds + 1)> round_keys_{};
};

}  // namespace pixelseal

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pixelseal/digest.hpp"

namespace pixelseal {

/// Arbitrary-length, non-empty camera identifier.
using CameraId = std::vector<std::uint8_t>;

/// 160-bit digest of a camera id. Its 16-byte prefix keys the block cipher.
struct SecretOriginalityIdentifier {
    Digest160 digest{};

    friend bool operator==(const SecretOriginalityIdentifier&,
                           const SecretOriginalityIdentifier&) = default;
};

/// 128-bit block-cipher key.
struct CipherKey {
    std::array<std::uint8_t, 16> bytes{};

    friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

/// Digest a camera id into its originality identifier.
/// Throws InvalidArgumentError on an empty id.
SecretOriginalityIdentifier derive_soi(std::span<const std::uint8_t> camera_id);

/// The 16-byte prefix of the identifier digest.
CipherKey derive_key(const SecretOriginalityIdentifier& soi);

/// First 4 digest bytes as 8 lowercase hex chars. Operator convenience for
/// reports; not a secret and not sufficient to verify.
std::string soi_fingerprint(const SecretOriginalityIdentifier& soi);

CameraId camera_id_from_text(std::string_view text);
CameraId camera_id_from_hex(std::string_view hex);

}  // namespace pixelseal

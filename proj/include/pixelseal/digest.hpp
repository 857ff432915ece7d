#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pixelseal {

/// 160-bit digest value.
using Digest160 = std::array<std::uint8_t, 20>;

/// SHA-1 of an arbitrary byte message (FIPS 180-4).
Digest160 sha1(std::span<const std::uint8_t> message);

std::string to_hex(std::span<const std::uint8_t> bytes);

/// Parses an even-length hex string. Throws InvalidArgumentError on odd
/// length or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace pixelseal

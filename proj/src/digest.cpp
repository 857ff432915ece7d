#include "pixelseal/digest.hpp"

#include <bit>
#include <cstring>
#include <vector>

#include "pixelseal/errors.hpp"

namespace pixelseal {

namespace {

constexpr std::uint32_t rotl32(std::uint32_t x, int n) {
    return std::rotl(x, n);
}

}  // namespace

Digest160 sha1(std::span<const std::uint8_t> message) {
    std::uint32_t h0 = 0x67452301u;
    std::uint32_t h1 = 0xEFCDAB89u;
    std::uint32_t h2 = 0x98BADCFEu;
    std::uint32_t h3 = 0x10325476u;
    std::uint32_t h4 = 0xC3D2E1F0u;

    // Pad: 0x80, zeros, 64-bit big-endian bit length.
    std::vector<std::uint8_t> padded(message.begin(), message.end());
    const std::uint64_t bit_len = static_cast<std::uint64_t>(message.size()) * 8;
    padded.push_back(0x80);
    while (padded.size() % 64 != 56) padded.push_back(0x00);
    for (int i = 7; i >= 0; --i) {
        padded.push_back(static_cast<std::uint8_t>(bit_len >> (8 * i)));
    }

    std::uint32_t w[80];
    for (std::size_t chunk = 0; chunk < padded.size(); chunk += 64) {
        const std::uint8_t* p = padded.data() + chunk;
        for (int t = 0; t < 16; ++t) {
            w[t] = (static_cast<std::uint32_t>(p[4 * t]) << 24) |
                   (static_cast<std::uint32_t>(p[4 * t + 1]) << 16) |
                   (static_cast<std::uint32_t>(p[4 * t + 2]) << 8) |
                   static_cast<std::uint32_t>(p[4 * t + 3]);
        }
        for (int t = 16; t < 80; ++t) {
            w[t] = rotl32(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);
        }

        std::uint32_t a = h0, b = h1, c = h2, d = h3, e = h4;
        for (int t = 0; t < 80; ++t) {
            std::uint32_t f, k;
            if (t < 20) {
                f = (b & c) | (~b & d);
                k = 0x5A827999u;
            } else if (t < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (t < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            const std::uint32_t tmp = rotl32(a, 5) + f + e + k + w[t];
            e = d;
            d = c;
            c = rotl32(b, 30);
            b = a;
            a = tmp;
        }
        h0 += a;
        h1 += b;
        h2 += c;
        h3 += d;
        h4 += e;
    }

    Digest160 out;
    const std::uint32_t hs[5] = {h0, h1, h2, h3, h4};
    for (int i = 0; i < 5; ++i) {
        out[4 * i + 0] = static_cast<std::uint8_t>(hs[i] >> 24);
        out[4 * i + 1] = static_cast<std::uint8_t>(hs[i] >> 16);
        out[4 * i + 2] = static_cast<std::uint8_t>(hs[i] >> 8);
        out[4 * i + 3] = static_cast<std::uint8_t>(hs[i]);
    }
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0F]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) {
        throw InvalidArgumentError("hex string has odd length");
    }
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = nibble(hex[i]);
        const int lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            throw InvalidArgumentError("invalid hex character in input");
        }
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

}  // namespace pixelseal

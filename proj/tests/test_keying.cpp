#include <doctest.h>

#include <set>
#include <string>

#include "pixelseal/digest.hpp"
#include "pixelseal/errors.hpp"
#include "pixelseal/keying.hpp"

using namespace pixelseal;

TEST_CASE("derive_soi rejects an empty id") {
    CHECK_THROWS_AS(derive_soi(CameraId{}), InvalidArgumentError);
}

TEST_CASE("derive_soi of 'abc' matches the reference digest") {
    const auto soi = derive_soi(camera_id_from_text("abc"));
    CHECK(to_hex(soi.digest) == "a9993e364706816aba3e25717850c26c9cd0d89d");
    // Deterministic across calls.
    CHECK(derive_soi(camera_id_from_text("abc")) == soi);
}

TEST_CASE("derive_key is the 16-byte prefix") {
    SecretOriginalityIdentifier soi;
    for (int i = 0; i < 20; ++i) soi.digest[i] = static_cast<std::uint8_t>(i);
    const CipherKey key = derive_key(soi);
    for (int i = 0; i < 16; ++i) CHECK(key.bytes[i] == i);

    const auto abc_key = derive_key(derive_soi(camera_id_from_text("abc")));
    CHECK(to_hex(abc_key.bytes) == "a9993e364706816aba3e25717850c26c");
}

TEST_CASE("SOIs sharing a 16-byte prefix share the key") {
    SecretOriginalityIdentifier a, b;
    for (int i = 0; i < 20; ++i) {
        a.digest[i] = static_cast<std::uint8_t>(i);
        b.digest[i] = static_cast<std::uint8_t>(i < 16 ? i : 0xAA);
    }
    CHECK(derive_key(a) == derive_key(b));
}

TEST_CASE("avalanche: flipping any bit of the id changes the digest") {
    const CameraId base = camera_id_from_text("abc");
    const auto reference = derive_soi(base);
    for (std::size_t byte = 0; byte < base.size(); ++byte) {
        for (int bit = 0; bit < 8; ++bit) {
            CameraId flipped = base;
            flipped[byte] ^= static_cast<std::uint8_t>(1u << bit);
            CHECK(derive_soi(flipped).digest != reference.digest);
        }
    }
}

TEST_CASE("no key collisions across all 2-byte camera ids") {
    // A sanity sweep, not a cryptographic claim.
    std::set<std::array<std::uint8_t, 16>> keys;
    for (int hi = 0; hi < 256; ++hi) {
        for (int lo = 0; lo < 256; ++lo) {
            const CameraId id{static_cast<std::uint8_t>(hi),
                              static_cast<std::uint8_t>(lo)};
            keys.insert(derive_key(derive_soi(id)).bytes);
        }
    }
    CHECK(keys.size() == 65536);
}

TEST_CASE("camera id parsing") {
    CHECK(camera_id_from_text("ab") == CameraId{'a', 'b'});
    CHECK(camera_id_from_hex("0a0B") == CameraId{0x0A, 0x0B});
    CHECK_THROWS_AS(camera_id_from_text(""), InvalidArgumentError);
    CHECK_THROWS_AS(camera_id_from_hex(""), InvalidArgumentError);
    CHECK_THROWS_AS(camera_id_from_hex("xyz"), InvalidArgumentError);
}

TEST_CASE("soi fingerprint is the first four bytes in hex") {
    const auto soi = derive_soi(camera_id_from_text("abc"));
    CHECK(soi_fingerprint(soi) == "a9993e36");
}

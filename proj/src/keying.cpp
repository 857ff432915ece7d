#include "pixelseal/keying.hpp"

#include <algorithm>

#include "pixelseal/errors.hpp"

namespace pixelseal {

SecretOriginalityIdentifier derive_soi(std::span<const std::uint8_t> camera_id) {
    if (camera_id.empty()) {
        throw InvalidArgumentError("camera id must not be empty");
    }
    return SecretOriginalityIdentifier{sha1(camera_id)};
}

CipherKey derive_key(const SecretOriginalityIdentifier& soi) {
    CipherKey key;
    std::copy_n(soi.digest.begin(), key.bytes.size(), key.bytes.begin());
    return key;
}

std::string soi_fingerprint(const SecretOriginalityIdentifier& soi) {
    return to_hex(std::span(soi.digest).first(4));
}

CameraId camera_id_from_text(std::string_view text) {
    if (text.empty()) {
        throw InvalidArgumentError("camera id must not be empty");
    }
    return CameraId(text.begin(), text.end());
}

CameraId camera_id_from_hex(std::string_view hex) {
    CameraId id = from_hex(hex);
    if (id.empty()) {
        throw InvalidArgumentError("camera id must not be empty");
    }
    return id;
}

}  // namespace pixelseal

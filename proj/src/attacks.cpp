#include "pixelseal/attacks.hpp"

#include <random>
#include <string>

#include "pixelseal/errors.hpp"
#include "pixelseal/image_io.hpp"

namespace pixelseal {

namespace {

// Seeded bounded draw with engine-defined (hence portable) output;
// std::uniform_int_distribution is implementation-defined across libraries.
std::uint32_t bounded(std::mt19937& rng, std::uint32_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint32_t limit = std::mt19937::max() - std::mt19937::max() % n;
    std::uint32_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

void check_rect(const Rect& r, const ImagePlanes& image, const char* what) {
    if (r.w < 1 || r.h < 1 || r.x < 0 || r.y < 0 || r.x + r.w > image.width() ||
        r.y + r.h > image.height()) {
        throw InvalidArgumentError(std::string(what) + " rectangle out of bounds");
    }
}

ImagePlanes attack_one_pixel(const ImagePlanes& image, const AttackSpec& spec) {
    std::mt19937 rng(spec.seed);
    const int x = spec.x ? *spec.x
                         : static_cast<int>(bounded(rng, image.width()));
    const int y = spec.y ? *spec.y
                         : static_cast<int>(bounded(rng, image.height()));
    // Seed-chosen channel defaults to green or blue, the planes the scheme
    // actually covers.
    const Channel channel =
        spec.channel ? *spec.channel
                     : (bounded(rng, 2) == 0 ? Channel::green : Channel::blue);
    if (x < 0 || x >= image.width() || y < 0 || y >= image.height()) {
        throw InvalidArgumentError("one_pixel coordinate out of bounds");
    }

    ImagePlanes out = image;
    ByteGrid& plane = channel == Channel::red     ? out.red
                      : channel == Channel::green ? out.green
                                                  : out.blue;
    int delta = bounded(rng, 2) == 0 ? 1 : -1;
    const std::uint8_t value = plane.at(x, y);
    if (value == 0) delta = 1;
    if (value == 255) delta = -1;
    plane.at(x, y) = static_cast<std::uint8_t>(value + delta);
    return out;
}

ImagePlanes attack_copy_move(const ImagePlanes& image, const AttackSpec& spec) {
    if (!spec.src || !spec.dst) {
        throw InvalidArgumentError("copy_move requires src and dst rectangles");
    }
    const Rect src = *spec.src;
    const Rect dst = *spec.dst;
    if (src.w != dst.w || src.h != dst.h) {
        throw InvalidArgumentError("copy_move rectangles differ in size");
    }
    check_rect(src, image, "copy_move src");
    check_rect(dst, image, "copy_move dst");

    ImagePlanes out = image;
    ByteGrid* planes[3] = {&out.red, &out.green, &out.blue};
    const ByteGrid* sources[3] = {&image.red, &image.green, &image.blue};
    for (int c = 0; c < 3; ++c) {
        for (int dy = 0; dy < src.h; ++dy) {
            for (int dx = 0; dx < src.w; ++dx) {
                planes[c]->at(dst.x + dx, dst.y + dy) =
                    sources[c]->at(src.x + dx, src.y + dy);
            }
        }
    }
    return out;
}

ImagePlanes attack_splice(const ImagePlanes& image, const AttackSpec& spec) {
    if (!spec.dst) {
        throw InvalidArgumentError("splice requires a dst rectangle");
    }
    if (!spec.donor) {
        throw InvalidArgumentError("splice requires a donor image");
    }
    const ImagePlanes& donor = *spec.donor;
    if (donor.width() != image.width() || donor.height() != image.height()) {
        throw InvalidArgumentError("splice donor size mismatch");
    }
    const Rect dst = *spec.dst;
    check_rect(dst, image, "splice dst");

    ImagePlanes out = image;
    ByteGrid* planes[3] = {&out.red, &out.green, &out.blue};
    const ByteGrid* sources[3] = {&donor.red, &donor.green, &donor.blue};
    for (int c = 0; c < 3; ++c) {
        for (int dy = 0; dy < dst.h; ++dy) {
            for (int dx = 0; dx < dst.w; ++dx) {
                planes[c]->at(dst.x + dx, dst.y + dy) =
                    sources[c]->at(dst.x + dx, dst.y + dy);
            }
        }
    }
    return out;
}

}  // namespace

AttackKind parse_attack_kind(std::string_view name) {
    if (name == "one_pixel") return AttackKind::one_pixel;
    if (name == "copy_move") return AttackKind::copy_move;
    if (name == "splice") return AttackKind::splice;
    if (name == "wrong_key") return AttackKind::wrong_key;
    if (name == "recompress") return AttackKind::recompress;
    throw InvalidArgumentError("unknown attack kind '" + std::string(name) + "'");
}

std::string_view attack_kind_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::one_pixel: return "one_pixel";
        case AttackKind::copy_move: return "copy_move";
        case AttackKind::splice: return "splice";
        case AttackKind::wrong_key: return "wrong_key";
        case AttackKind::recompress: return "recompress";
    }
    return "unknown";
}

Channel parse_channel(std::string_view name) {
    if (name == "r" || name == "red") return Channel::red;
    if (name == "g" || name == "green") return Channel::green;
    if (name == "b" || name == "blue") return Channel::blue;
    throw InvalidArgumentError("unknown channel '" + std::string(name) + "'");
}

ImagePlanes apply_attack(const ImagePlanes& image, const AttackSpec& spec) {
    switch (spec.kind) {
        case AttackKind::one_pixel:
            return attack_one_pixel(image, spec);
        case AttackKind::copy_move:
            return attack_copy_move(image, spec);
        case AttackKind::splice:
            return attack_splice(image, spec);
        case AttackKind::wrong_key:
            return image;
        case AttackKind::recompress:
            return decode_jpeg(encode_jpeg(image, spec.quality));
    }
    throw InvalidArgumentError("unknown attack kind");
}

}  // namespace pixelseal

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "pixelseal/raster.hpp"

namespace pixelseal {

enum class AttackKind { one_pixel, copy_move, splice, wrong_key, recompress };

AttackKind parse_attack_kind(std::string_view name);
std::string_view attack_kind_name(AttackKind kind);

enum class Channel { red, green, blue };

Channel parse_channel(std::string_view name);

struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

/// A deterministic tamper recipe. With a fixed spec the attack is a pure
/// function of the image; the seed drives every randomized choice (and the
/// coordinate/channel of one_pixel when they are left unset).
struct AttackSpec {
    AttackKind kind = AttackKind::one_pixel;
    std::uint32_t seed = 0;

    // one_pixel: coordinate and channel; seed-chosen when unset.
    std::optional<int> x;
    std::optional<int> y;
    std::optional<Channel> channel;

    // copy_move: src copied over dst; splice: dst replaced from the donor.
    std::optional<Rect> src;
    std::optional<Rect> dst;
    std::shared_ptr<const ImagePlanes> donor;

    // recompress
    int quality = 90;
};

/// Apply the attack. one_pixel perturbs exactly one sample by +-1 (direction
/// seed-chosen, flipped at the 0/255 clamp); copy_move pastes all three
/// channels; wrong_key returns the image unchanged (that attack happens at
/// verification time). Throws InvalidArgumentError for out-of-bounds
/// rectangles or donor size mismatch.
ImagePlanes apply_attack(const ImagePlanes& image, const AttackSpec& spec);

}  // namespace pixelseal

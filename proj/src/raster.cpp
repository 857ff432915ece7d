#include "pixelseal/raster.hpp"

#include <string>
#include <utility>

namespace pixelseal {

namespace {

void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
        throw DimensionError("grid dimensions must be at least 1x1, got " +
                             std::to_string(width) + "x" + std::to_string(height));
    }
}

}  // namespace

ByteGrid::ByteGrid(int width, int height, std::uint8_t fill)
    : width_(width),
      height_(height),
      data_(static_cast<std::size_t>(width) * height, fill) {
    check_dims(width, height);
}

ByteGrid::ByteGrid(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height) {
        throw DimensionError("grid data length " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(width) + "x" +
                             std::to_string(height));
    }
}

ImagePlanes split_planes(const InterleavedRaster& raster) {
    if (raster.channels != 3) {
        throw UnsupportedFormatError("expected 3-channel RGB input, got " +
                                     std::to_string(raster.channels) + " channels");
    }
    check_dims(raster.width, raster.height);
    const std::size_t pixels =
        static_cast<std::size_t>(raster.width) * raster.height;
    if (raster.data.size() != pixels * 3) {
        throw DimensionError("interleaved buffer length does not match dimensions");
    }

    std::vector<std::uint8_t> r(pixels), g(pixels), b(pixels);
    for (std::size_t i = 0; i < pixels; ++i) {
        r[i] = raster.data[3 * i + 0];
        g[i] = raster.data[3 * i + 1];
        b[i] = raster.data[3 * i + 2];
    }
    return ImagePlanes{ByteGrid(raster.width, raster.height, std::move(r)),
                       ByteGrid(raster.width, raster.height, std::move(g)),
                       ByteGrid(raster.width, raster.height, std::move(b))};
}

ImagePlanes merge_planes(ByteGrid red, ByteGrid green, ByteGrid blue) {
    if (!red.same_size(green) || !red.same_size(blue)) {
        throw DimensionError("merge_planes: planes differ in size");
    }
    return ImagePlanes{std::move(red), std::move(green), std::move(blue)};
}

InterleavedRaster interleave(const ImagePlanes& planes) {
    const std::size_t pixels = planes.red.size();
    InterleavedRaster out;
    out.width = planes.width();
    out.height = planes.height();
    out.channels = 3;
    out.data.resize(pixels * 3);
    for (std::size_t i = 0; i < pixels; ++i) {
        out.data[3 * i + 0] = planes.red[i];
        out.data[3 * i + 1] = planes.green[i];
        out.data[3 * i + 2] = planes.blue[i];
    }
    return out;
}

}  // namespace pixelseal

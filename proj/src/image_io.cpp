#include "pixelseal/image_io.hpp"

#include <jpeglib.h>
#include <png.h>

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "pixelseal/errors.hpp"

namespace pixelseal {

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failure on " + path.string());
    }
    return bytes;
}

bool has_png_ext(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".png";
}

// ---------------------------------------------------------------- PNG read

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct MemorySource {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t offset;
};

void png_memory_read(png_structp png, png_bytep out, png_size_t count) {
    auto* src = static_cast<MemorySource*>(png_get_io_ptr(png));
    if (src->offset + count > src->size) {
        png_error(png, "read past end of buffer");
    }
    std::memcpy(out, src->data + src->offset, count);
    src->offset += count;
}

ImagePlanes decode_png(std::span<const std::uint8_t> bytes, LoadInfo* info_out) {
    PngReader reader;
    reader.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                        nullptr);
    if (!reader.png) throw DecodeError("libpng init failed");
    reader.info = png_create_info_struct(reader.png);
    if (!reader.info) throw DecodeError("libpng init failed");

    MemorySource src{bytes.data(), bytes.size(), 0};

    std::vector<std::uint8_t> pixels;
    std::vector<png_bytep> rows;
    InterleavedRaster raster;
    bool alpha_stripped = false;
    bool unsupported_depth = false;
    bool unsupported_gray = false;

    if (setjmp(png_jmpbuf(reader.png))) {
        throw DecodeError("png decode failed");
    }

    png_set_read_fn(reader.png, &src, png_memory_read);
    png_read_info(reader.png, reader.info);

    const int bit_depth = png_get_bit_depth(reader.png, reader.info);
    const int color_type = png_get_color_type(reader.png, reader.info);
    if (bit_depth == 16) unsupported_depth = true;
    if (color_type == PNG_COLOR_TYPE_GRAY ||
        color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        unsupported_gray = true;
    }
    if (unsupported_depth) {
        throw UnsupportedFormatError("16-bit-per-channel PNG is not supported");
    }
    if (unsupported_gray) {
        throw UnsupportedFormatError("grayscale PNG is not supported");
    }

    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(reader.png);
    }
    if (png_get_valid(reader.png, reader.info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(reader.png);
    }
    png_read_update_info(reader.png, reader.info);

    int channels = png_get_channels(reader.png, reader.info);
    if (channels == 4) {
        png_set_strip_alpha(reader.png);
        alpha_stripped = true;
        png_read_update_info(reader.png, reader.info);
        channels = png_get_channels(reader.png, reader.info);
    }
    if (channels != 3) {
        throw UnsupportedFormatError("PNG did not normalize to 8-bit RGB");
    }

    raster.width = static_cast<int>(png_get_image_width(reader.png, reader.info));
    raster.height = static_cast<int>(png_get_image_height(reader.png, reader.info));
    raster.channels = 3;
    pixels.resize(static_cast<std::size_t>(raster.width) * raster.height * 3);
    rows.resize(raster.height);
    for (int y = 0; y < raster.height; ++y) {
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * raster.width * 3;
    }
    png_read_image(reader.png, rows.data());
    png_read_end(reader.png, nullptr);

    raster.data = std::move(pixels);
    if (info_out) {
        info_out->format = "png";
        info_out->alpha_stripped = alpha_stripped;
    }
    return split_planes(raster);
}

// --------------------------------------------------------------- PNG write

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

void encode_png_to_file(const ImagePlanes& planes, FILE* fp) {
    PngWriter writer;
    writer.png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!writer.png) throw IoError("libpng init failed");
    writer.info = png_create_info_struct(writer.png);
    if (!writer.info) throw IoError("libpng init failed");

    const InterleavedRaster raster = interleave(planes);
    std::vector<png_const_bytep> rows(raster.height);
    for (int y = 0; y < raster.height; ++y) {
        rows[y] = raster.data.data() + static_cast<std::size_t>(y) * raster.width * 3;
    }

    if (setjmp(png_jmpbuf(writer.png))) {
        throw IoError("png encode failed");
    }
    png_init_io(writer.png, fp);
    png_set_IHDR(writer.png, writer.info, raster.width, raster.height, 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(writer.png, writer.info);
    for (int y = 0; y < raster.height; ++y) {
        png_write_row(writer.png, rows[y]);
    }
    png_write_end(writer.png, writer.info);
}

// -------------------------------------------------------------------- JPEG

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(err->jump, 1);
}

struct JpegDecompressGuard {
    jpeg_decompress_struct* cinfo;
    ~JpegDecompressGuard() { jpeg_destroy_decompress(cinfo); }
};

struct JpegCompressGuard {
    jpeg_compress_struct* cinfo;
    ~JpegCompressGuard() { jpeg_destroy_compress(cinfo); }
};

}  // namespace

ImagePlanes decode_jpeg(std::span<const std::uint8_t> bytes) {
    jpeg_decompress_struct cinfo{};
    JpegErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;

    jpeg_create_decompress(&cinfo);
    JpegDecompressGuard guard{&cinfo};

    InterleavedRaster raster;
    if (setjmp(err.jump)) {
        throw DecodeError("jpeg decode failed");
    }

    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    raster.width = static_cast<int>(cinfo.output_width);
    raster.height = static_cast<int>(cinfo.output_height);
    raster.channels = 3;
    raster.data.resize(static_cast<std::size_t>(raster.width) * raster.height * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = raster.data.data() +
                       static_cast<std::size_t>(cinfo.output_scanline) *
                           raster.width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    return split_planes(raster);
}

std::vector<std::uint8_t> encode_jpeg(const ImagePlanes& planes, int quality) {
    if (quality < 1 || quality > 100) {
        throw InvalidArgumentError("jpeg quality must be in [1,100]");
    }
    jpeg_compress_struct cinfo{};
    JpegErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;

    jpeg_create_compress(&cinfo);
    JpegCompressGuard guard{&cinfo};

    unsigned char* buffer = nullptr;
    unsigned long buffer_size = 0;

    const InterleavedRaster raster = interleave(planes);
    if (setjmp(err.jump)) {
        if (buffer) std::free(buffer);
        throw IoError("jpeg encode failed");
    }

    jpeg_mem_dest(&cinfo, &buffer, &buffer_size);
    cinfo.image_width = static_cast<JDIMENSION>(raster.width);
    cinfo.image_height = static_cast<JDIMENSION>(raster.height);
    cinfo.input_components = 3;
    cinfo.in_color_space = JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(
            raster.data.data() +
            static_cast<std::size_t>(cinfo.next_scanline) * raster.width * 3);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);

    std::vector<std::uint8_t> out(buffer, buffer + buffer_size);
    std::free(buffer);
    return out;
}

namespace {

// --------------------------------------------------------------------- BMP

std::uint32_t read_u32le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16le(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

// Uncompressed 24/32-bit BMP, bottom-up or top-down.
ImagePlanes decode_bmp(std::span<const std::uint8_t> bytes, LoadInfo* info_out) {
    if (bytes.size() < 54) throw DecodeError("truncated BMP header");
    const std::uint32_t pixel_offset = read_u32le(bytes.data() + 10);
    const std::uint32_t header_size = read_u32le(bytes.data() + 14);
    if (header_size < 40) throw DecodeError("unsupported BMP header");
    const std::int32_t width = static_cast<std::int32_t>(read_u32le(bytes.data() + 18));
    const std::int32_t raw_height =
        static_cast<std::int32_t>(read_u32le(bytes.data() + 22));
    const std::uint16_t bpp = read_u16le(bytes.data() + 28);
    const std::uint32_t compression = read_u32le(bytes.data() + 30);

    if (bpp != 24 && bpp != 32) {
        throw UnsupportedFormatError("only 24/32-bit BMP is supported, got " +
                                     std::to_string(bpp) + " bpp");
    }
    if (compression != 0 && !(bpp == 32 && compression == 3)) {
        throw UnsupportedFormatError("compressed BMP is not supported");
    }
    if (width < 1 || raw_height == 0) throw DecodeError("bad BMP dimensions");

    const bool top_down = raw_height < 0;
    const std::int32_t height = top_down ? -raw_height : raw_height;
    const int bytes_per_pixel = bpp / 8;
    const std::size_t row_stride =
        (static_cast<std::size_t>(width) * bytes_per_pixel + 3) / 4 * 4;
    if (pixel_offset + row_stride * height > bytes.size()) {
        throw DecodeError("truncated BMP pixel data");
    }

    InterleavedRaster raster;
    raster.width = width;
    raster.height = height;
    raster.channels = 3;
    raster.data.resize(static_cast<std::size_t>(width) * height * 3);
    const bool alpha_stripped = bpp == 32;

    for (int y = 0; y < height; ++y) {
        const int src_y = top_down ? y : height - 1 - y;
        const std::uint8_t* row = bytes.data() + pixel_offset + row_stride * src_y;
        for (int x = 0; x < width; ++x) {
            const std::uint8_t* px = row + static_cast<std::size_t>(x) * bytes_per_pixel;
            std::uint8_t* dst =
                raster.data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
            dst[0] = px[2];  // BMP stores BGR(A)
            dst[1] = px[1];
            dst[2] = px[0];
        }
    }
    if (info_out) {
        info_out->format = "bmp";
        info_out->alpha_stripped = alpha_stripped;
    }
    return split_planes(raster);
}

}  // namespace

ImagePlanes load_image(const std::filesystem::path& path, LoadInfo* info) {
    const std::vector<std::uint8_t> bytes = read_file(path);
    if (bytes.size() >= 8 && bytes[0] == 0x89 && bytes[1] == 'P' &&
        bytes[2] == 'N' && bytes[3] == 'G') {
        return decode_png(bytes, info);
    }
    if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 &&
        bytes[2] == 0xFF) {
        if (info) {
            info->format = "jpeg";
            info->alpha_stripped = false;
        }
        return decode_jpeg(bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') {
        return decode_bmp(bytes, info);
    }
    throw DecodeError(path.string() + " is not a PNG, BMP, or JPEG file");
}

void store_image(const ImagePlanes& planes, const std::filesystem::path& path) {
    if (!has_png_ext(path)) {
        throw InvalidArgumentError(
            "output must be a .png path (lossless output only), got " +
            path.string());
    }
    FILE* fp = std::fopen(path.string().c_str(), "wb");
    if (!fp) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    try {
        encode_png_to_file(planes, fp);
    } catch (...) {
        std::fclose(fp);
        throw;
    }
    if (std::fclose(fp) != 0) {
        throw IoError("write failure on " + path.string());
    }
}

}  // namespace pixelseal

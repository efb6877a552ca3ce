#include "diffharm/png_io.hpp"

#include <png.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

#include "diffharm/common.hpp"

namespace diffharm {

namespace {

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

void png_error_fn(png_structp png, png_const_charp msg) {
    throw IoError(std::string("libpng: ") + msg);
}

void png_warn_fn(png_structp, png_const_charp) {}

struct FileHandle {
    std::FILE* fp = nullptr;
    explicit FileHandle(const std::filesystem::path& p, const char* mode)
        : fp(std::fopen(p.c_str(), mode)) {}
    ~FileHandle() {
        if (fp) std::fclose(fp);
    }
};

// Decodes to 8-bit samples; channels is 1 (gray) or 3 (rgb).
struct Decoded {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<std::uint8_t> pixels;
};

Decoded decode_file(const std::filesystem::path& path) {
    FileHandle fh(path, "rb");
    if (!fh.fp) {
        throw IoError("cannot open file: " + path.string());
    }
    std::uint8_t sig[8];
    if (std::fread(sig, 1, 8, fh.fp) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
        throw IoError("not a PNG file: " + path.string());
    }

    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                   png_error_fn, png_warn_fn);
    if (!r.png) throw IoError("png_create_read_struct failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw IoError("png_create_info_struct failed");

    png_init_io(r.png, fh.fp);
    png_set_sig_bytes(r.png, 8);
    png_read_info(r.png, r.info);

    const int bit_depth = png_get_bit_depth(r.png, r.info);
    const int color_type = png_get_color_type(r.png, r.info);
    if (bit_depth > 8) {
        throw IoError("unsupported bit depth " + std::to_string(bit_depth) +
                      " (expected 8): " + path.string());
    }

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(r.png);
    if (png_get_valid(r.png, r.info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(r.png);
    if (color_type & PNG_COLOR_MASK_ALPHA ||
        png_get_valid(r.png, r.info, PNG_INFO_tRNS))
        png_set_strip_alpha(r.png);

    png_set_interlace_handling(r.png);
    png_read_update_info(r.png, r.info);

    Decoded out;
    out.height = static_cast<int>(png_get_image_height(r.png, r.info));
    out.width = static_cast<int>(png_get_image_width(r.png, r.info));
    out.channels = png_get_channels(r.png, r.info);
    if (out.channels != 1 && out.channels != 3) {
        throw IoError("unsupported channel count " +
                      std::to_string(out.channels) + ": " + path.string());
    }

    const std::size_t stride = png_get_rowbytes(r.png, r.info);
    out.pixels.resize(stride * out.height);
    std::vector<png_bytep> rows(out.height);
    for (int y = 0; y < out.height; ++y)
        rows[y] = out.pixels.data() + stride * y;
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return out;
}

void append_bytes(png_structp png, png_bytep data, png_size_t len) {
    auto* buf = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    buf->insert(buf->end(), data, data + len);
}

std::vector<std::uint8_t> encode_rows(int height, int width, int channels,
                                      const std::uint8_t* pixels) {
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                    png_error_fn, png_warn_fn);
    if (!w.png) throw IoError("png_create_write_struct failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw IoError("png_create_info_struct failed");

    std::vector<std::uint8_t> out;
    png_set_write_fn(w.png, &out, append_bytes, [](png_structp) {});

    const int color =
        channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(w.png, w.info, width, height, 8, color, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (int y = 0; y < height; ++y) {
        png_write_row(w.png, const_cast<png_bytep>(pixels + stride * y));
    }
    png_write_end(w.png, nullptr);
    return out;
}

std::uint8_t quantize(double v) {
    const long q = std::lround(clamp01(v) * 255.0);
    return static_cast<std::uint8_t>(std::clamp(q, 0L, 255L));
}

} // namespace

ImageRGB load_png(const std::filesystem::path& path) {
    const Decoded d = decode_file(path);
    ImageRGB img(d.height, d.width);
    const std::size_t n = img.pixel_count();
    if (d.channels == 3) {
        for (std::size_t i = 0; i < n * 3; ++i)
            img.data[i] = d.pixels[i] / 255.0;
    } else {
        for (std::size_t p = 0; p < n; ++p) {
            const double v = d.pixels[p] / 255.0;
            img.data[p * 3] = img.data[p * 3 + 1] = img.data[p * 3 + 2] = v;
        }
    }
    return img;
}

Mask load_mask_png(const std::filesystem::path& path) {
    const Decoded d = decode_file(path);
    Mask mask(d.height, d.width);
    const std::size_t n = mask.data.size();
    for (std::size_t p = 0; p < n; ++p) {
        int v;
        if (d.channels == 1) {
            v = d.pixels[p];
        } else {
            v = (d.pixels[p * 3] + d.pixels[p * 3 + 1] + d.pixels[p * 3 + 2]) / 3;
        }
        mask.data[p] = v >= 128 ? 1 : 0;
    }
    return mask;
}

std::vector<std::uint8_t> encode_png(const ImageRGB& img) {
    std::vector<std::uint8_t> pixels(img.data.size());
    for (std::size_t i = 0; i < img.data.size(); ++i)
        pixels[i] = quantize(img.data[i]);
    return encode_rows(img.height, img.width, 3, pixels.data());
}

std::vector<std::uint8_t> encode_mask_png(const Mask& mask) {
    std::vector<std::uint8_t> pixels(mask.data.size());
    for (std::size_t i = 0; i < mask.data.size(); ++i)
        pixels[i] = mask.data[i] ? 255 : 0;
    return encode_rows(mask.height, mask.width, 1, pixels.data());
}

void write_file_atomic(const std::filesystem::path& path, const void* data,
                       std::size_t size) {
    static std::atomic<unsigned> counter{0};
    auto dir = path.parent_path();
    if (dir.empty()) dir = ".";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);

    const auto tmp = dir / (path.filename().string() + ".tmp" +
                            std::to_string(counter.fetch_add(1)));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open for write: " + tmp.string());
        f.write(static_cast<const char*>(data),
                static_cast<std::streamsize>(size));
        if (!f) throw IoError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("rename failed for " + path.string() + ": " +
                      ec.message());
    }
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text) {
    write_file_atomic(path, text.data(), text.size());
}

void save_png(const ImageRGB& img, const std::filesystem::path& path) {
    const auto bytes = encode_png(img);
    write_file_atomic(path, bytes.data(), bytes.size());
}

void save_mask_png(const Mask& mask, const std::filesystem::path& path) {
    const auto bytes = encode_mask_png(mask);
    write_file_atomic(path, bytes.data(), bytes.size());
}

} // namespace diffharm

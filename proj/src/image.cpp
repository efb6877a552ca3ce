#include "diffharm/image.hpp"

#include <cmath>

#include "diffharm/common.hpp"

namespace diffharm {

ImageRGB::ImageRGB(int h, int w, double fill)
    : height(h), width(w), data(static_cast<std::size_t>(h) * w * 3, fill) {
    if (h < 1 || w < 1) {
        throw ShapeError("ImageRGB: dimensions must be >= 1, got " +
                         std::to_string(h) + "x" + std::to_string(w));
    }
}

Mask::Mask(int h, int w, std::uint8_t fill)
    : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill) {}

std::size_t Mask::foreground_count() const {
    std::size_t n = 0;
    for (std::uint8_t v : data) n += v;
    return n;
}

HslImage::HslImage(int h, int w, Colorspace cs)
    : height(h), width(w), space(cs),
      data(static_cast<std::size_t>(h) * w * 3, 0.0) {}

GrayImage to_grayscale(const ImageRGB& img) {
    GrayImage out;
    out.height = img.height;
    out.width = img.width;
    out.data.resize(img.pixel_count());
    for (std::size_t p = 0; p < out.data.size(); ++p) {
        out.data[p] =
            (img.data[p * 3] + img.data[p * 3 + 1] + img.data[p * 3 + 2]) / 3.0;
    }
    return out;
}

namespace {

// Shared hue sector logic for the hexcone models. Returns H in [0, 360).
double hue_of(double r, double g, double b, double maxc, double chroma) {
    if (chroma <= 0.0) return 0.0;
    double h;
    if (maxc == r) {
        h = (g - b) / chroma;
        if (h < 0.0) h += 6.0;
    } else if (maxc == g) {
        h = 2.0 + (b - r) / chroma;
    } else {
        h = 4.0 + (r - g) / chroma;
    }
    return h * 60.0;
}

std::array<double, 3> sector_rgb(double h, double chroma, double m) {
    h = h - 360.0 * std::floor(h / 360.0);
    const double hp = h / 60.0;
    const double x = chroma * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0.0, g = 0.0, b = 0.0;
    switch (static_cast<int>(hp)) {
        case 0: r = chroma; g = x; break;
        case 1: r = x; g = chroma; break;
        case 2: g = chroma; b = x; break;
        case 3: g = x; b = chroma; break;
        case 4: r = x; b = chroma; break;
        default: r = chroma; b = x; break;
    }
    return {r + m, g + m, b + m};
}

} // namespace

std::array<double, 3> rgb_to_hsl_pixel(double r, double g, double b) {
    const double maxc = std::max({r, g, b});
    const double minc = std::min({r, g, b});
    const double c = maxc - minc;
    const double l = (maxc + minc) / 2.0;
    double s = 0.0;
    if (c > 0.0) {
        s = (l <= 0.5) ? c / (maxc + minc) : c / (2.0 - maxc - minc);
    }
    return {hue_of(r, g, b, maxc, c), s, l};
}

std::array<double, 3> hsl_to_rgb_pixel(double h, double s, double l) {
    const double c = (1.0 - std::fabs(2.0 * l - 1.0)) * s;
    return sector_rgb(h, c, l - c / 2.0);
}

std::array<double, 3> rgb_to_hsv_pixel(double r, double g, double b) {
    const double maxc = std::max({r, g, b});
    const double minc = std::min({r, g, b});
    const double c = maxc - minc;
    const double s = (maxc > 0.0) ? c / maxc : 0.0;
    return {hue_of(r, g, b, maxc, c), s, maxc};
}

std::array<double, 3> hsv_to_rgb_pixel(double h, double s, double v) {
    const double c = v * s;
    return sector_rgb(h, c, v - c);
}

namespace {

template <typename Fn>
HslImage convert_forward(const ImageRGB& img, Colorspace cs, Fn fn) {
    HslImage out(img.height, img.width, cs);
    for (std::size_t p = 0; p < img.pixel_count(); ++p) {
        const auto hsl =
            fn(img.data[p * 3], img.data[p * 3 + 1], img.data[p * 3 + 2]);
        out.data[p * 3] = hsl[0];
        out.data[p * 3 + 1] = hsl[1];
        out.data[p * 3 + 2] = hsl[2];
    }
    return out;
}

template <typename Fn>
ImageRGB convert_back(const HslImage& img, Fn fn) {
    ImageRGB out(img.height, img.width);
    for (std::size_t p = 0; p < out.pixel_count(); ++p) {
        const auto rgb =
            fn(img.data[p * 3], img.data[p * 3 + 1], img.data[p * 3 + 2]);
        out.data[p * 3] = clamp01(rgb[0]);
        out.data[p * 3 + 1] = clamp01(rgb[1]);
        out.data[p * 3 + 2] = clamp01(rgb[2]);
    }
    return out;
}

} // namespace

HslImage rgb_to_hsl(const ImageRGB& img) {
    return convert_forward(img, Colorspace::HSL, rgb_to_hsl_pixel);
}

ImageRGB hsl_to_rgb(const HslImage& img) {
    return convert_back(img, hsl_to_rgb_pixel);
}

HslImage rgb_to_hsv(const ImageRGB& img) {
    return convert_forward(img, Colorspace::HSV, rgb_to_hsv_pixel);
}

ImageRGB hsv_to_rgb(const HslImage& img) {
    return convert_back(img, hsv_to_rgb_pixel);
}

HslImage to_colorspace(const ImageRGB& img, Colorspace cs) {
    return cs == Colorspace::HSL ? rgb_to_hsl(img) : rgb_to_hsv(img);
}

ImageRGB from_colorspace(const HslImage& img) {
    return img.space == Colorspace::HSL ? hsl_to_rgb(img) : hsv_to_rgb(img);
}

ImageRGB resize_bilinear(const ImageRGB& img, int out_h, int out_w) {
    if (out_h < 1 || out_w < 1) {
        throw ShapeError("resize_bilinear: target dims must be >= 1, got " +
                         std::to_string(out_h) + "x" + std::to_string(out_w));
    }
    if (out_h == img.height && out_w == img.width) return img;

    ImageRGB out(out_h, out_w);
    const double sy = static_cast<double>(img.height) / out_h;
    const double sx = static_cast<double>(img.width) / out_w;
    auto clampi = [](int v, int hi) { return std::clamp(v, 0, hi); };

    for (int y = 0; y < out_h; ++y) {
        const double fy = (y + 0.5) * sy - 0.5;
        const int y0 = static_cast<int>(std::floor(fy));
        const double wy = fy - y0;
        const int ya = clampi(y0, img.height - 1);
        const int yb = clampi(y0 + 1, img.height - 1);
        for (int x = 0; x < out_w; ++x) {
            const double fx = (x + 0.5) * sx - 0.5;
            const int x0 = static_cast<int>(std::floor(fx));
            const double wx = fx - x0;
            const int xa = clampi(x0, img.width - 1);
            const int xb = clampi(x0 + 1, img.width - 1);
            for (int c = 0; c < 3; ++c) {
                const double top =
                    img.at(ya, xa, c) * (1.0 - wx) + img.at(ya, xb, c) * wx;
                const double bot =
                    img.at(yb, xa, c) * (1.0 - wx) + img.at(yb, xb, c) * wx;
                out.at(y, x, c) = clamp01(top * (1.0 - wy) + bot * wy);
            }
        }
    }
    return out;
}

Mask resize_nearest(const Mask& mask, int out_h, int out_w) {
    if (out_h < 1 || out_w < 1) {
        throw ShapeError("resize_nearest: target dims must be >= 1");
    }
    if (out_h == mask.height && out_w == mask.width) return mask;

    Mask out(out_h, out_w);
    const double sy = static_cast<double>(mask.height) / out_h;
    const double sx = static_cast<double>(mask.width) / out_w;
    for (int y = 0; y < out_h; ++y) {
        int yy = std::clamp(static_cast<int>(std::floor((y + 0.5) * sy)), 0,
                            mask.height - 1);
        for (int x = 0; x < out_w; ++x) {
            int xx = std::clamp(static_cast<int>(std::floor((x + 0.5) * sx)), 0,
                                mask.width - 1);
            out.at(y, x) = mask.at(yy, xx);
        }
    }
    return out;
}

Tensor image_to_tensor(const ImageRGB& img) {
    Tensor t;
    t.shape = {img.height, img.width, 3};
    t.data = img.data;
    return t;
}

ImageRGB tensor_to_image_clamped(const Tensor& t) {
    if (t.shape.channels != 3) {
        throw ShapeError("tensor_to_image_clamped: need 3 channels, got " +
                         t.shape.str());
    }
    ImageRGB img(t.shape.height, t.shape.width);
    for (std::size_t i = 0; i < t.data.size(); ++i)
        img.data[i] = clamp01(t.data[i]);
    return img;
}

} // namespace diffharm

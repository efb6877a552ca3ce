#ifndef DIFFHARM_IMAGE_HPP
#define DIFFHARM_IMAGE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "diffharm/tensor.hpp"

namespace diffharm {

// RGB image, channel values in [0, 1]. Public operations clamp at their
// boundaries; immutable-by-convention after construction.
struct ImageRGB {
    int height = 0;
    int width = 0;
    std::vector<double> data; // h*w*3 interleaved

    ImageRGB() = default;
    ImageRGB(int h, int w, double fill = 0.0);

    double& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    double at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(height) * width;
    }
};

struct GrayImage {
    int height = 0;
    int width = 0;
    std::vector<double> data; // h*w luminance

    double at(int y, int x) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
};

// Binary foreground mask, 1 = foreground.
struct Mask {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data;

    Mask() = default;
    Mask(int h, int w, std::uint8_t fill = 0);

    std::uint8_t at(int y, int x) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int y, int x) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t foreground_count() const;
};

enum class Colorspace { HSL, HSV };

// Per-pixel triples are (H in [0,360), S in [0,1], L-or-V in [0,1]).
// Channel 2 holds L for HSL and V for HSV.
struct HslImage {
    int height = 0;
    int width = 0;
    Colorspace space = Colorspace::HSL;
    std::vector<double> data;

    HslImage() = default;
    HslImage(int h, int w, Colorspace cs);

    double& at(int y, int x, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    double at(int y, int x, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
};

// Grayscale is the plain channel mean (R+G+B)/3, no perceptual weights.
// The guidance module differentiates exactly this formula.
GrayImage to_grayscale(const ImageRGB& img);

std::array<double, 3> rgb_to_hsl_pixel(double r, double g, double b);
std::array<double, 3> hsl_to_rgb_pixel(double h, double s, double l);
std::array<double, 3> rgb_to_hsv_pixel(double r, double g, double b);
std::array<double, 3> hsv_to_rgb_pixel(double h, double s, double v);

HslImage rgb_to_hsl(const ImageRGB& img);
ImageRGB hsl_to_rgb(const HslImage& img);
HslImage rgb_to_hsv(const ImageRGB& img);
ImageRGB hsv_to_rgb(const HslImage& img);

HslImage to_colorspace(const ImageRGB& img, Colorspace cs);
ImageRGB from_colorspace(const HslImage& img);

// Bilinear resize with half-pixel centers and edge-clamped sampling.
// Same-size resize is a bitwise copy.
ImageRGB resize_bilinear(const ImageRGB& img, int out_h, int out_w);
Mask resize_nearest(const Mask& mask, int out_h, int out_w);

Tensor image_to_tensor(const ImageRGB& img);
ImageRGB tensor_to_image_clamped(const Tensor& t);

} // namespace diffharm

#endif

#ifndef DIFFHARM_PNG_IO_HPP
#define DIFFHARM_PNG_IO_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "diffharm/image.hpp"

namespace diffharm {

// 8-bit PNG only. Intensities map v/255 on load and round(v*255) on save.
ImageRGB load_png(const std::filesystem::path& path);

// Grayscale (or RGB, averaged) PNG thresholded at 128: >=128 -> foreground.
Mask load_mask_png(const std::filesystem::path& path);

std::vector<std::uint8_t> encode_png(const ImageRGB& img);
std::vector<std::uint8_t> encode_mask_png(const Mask& mask);

// Atomic write: temp file in the same directory, then rename.
void save_png(const ImageRGB& img, const std::filesystem::path& path);
void save_mask_png(const Mask& mask, const std::filesystem::path& path);

void write_file_atomic(const std::filesystem::path& path,
                       const void* data, std::size_t size);
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text);

} // namespace diffharm

#endif

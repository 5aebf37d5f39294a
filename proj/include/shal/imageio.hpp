#pragma once

#include <string>
#include <vector>

#include "shal/image.hpp"

namespace shal {

// Loads an 8-bit 3-channel image; PNG or JPEG, detected by file magic.
// Palette/gray/alpha PNGs are expanded to RGB. Throws std::runtime_error on
// unreadable or unsupported files.
RgbImage load_image(const std::string& path);

// Single-channel 8-bit PNG (label maps).
GrayImage load_gray_png(const std::string& path);

void save_png(const std::string& path, const RgbImage& img);
void save_gray_png(const std::string& path, const GrayImage& img);
void save_jpeg(const std::string& path, const RgbImage& img, int quality = 95);

// true for .png/.jpg/.jpeg (case-insensitive)
bool has_image_extension(const std::string& path);

// Sorted list of image files directly inside `dir`.
std::vector<std::string> list_images(const std::string& dir);

}  // namespace shal

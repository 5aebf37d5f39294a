#pragma once

#include <cstdint>
#include <vector>

namespace shal {

// 8-bit sRGB raster, row-major interleaved RGB triples.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;  // width * height * 3

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {}

    size_t pixels() const { return static_cast<size_t>(width) * height; }
    uint8_t* px(int x, int y) { return data.data() + (static_cast<size_t>(y) * width + x) * 3; }
    const uint8_t* px(int x, int y) const {
        return data.data() + (static_cast<size_t>(y) * width + x) * 3;
    }
};

// CIELAB raster in 8-bit-scaled encoding: L' = L*255/100, A' = a+128, B' = b+128,
// all channels nominally in [0,255]. Stored as float triples.
struct LabImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;  // width * height * 3

    LabImage() = default;
    LabImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0.f) {}

    size_t pixels() const { return static_cast<size_t>(width) * height; }
    float* px(int x, int y) { return data.data() + (static_cast<size_t>(y) * width + x) * 3; }
    const float* px(int x, int y) const {
        return data.data() + (static_cast<size_t>(y) * width + x) * 3;
    }
};

// Single-channel 8-bit raster (label maps).
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;  // width * height

    GrayImage() = default;
    GrayImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h, 0) {}

    size_t pixels() const { return static_cast<size_t>(width) * height; }
    uint8_t& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
};

}  // namespace shal

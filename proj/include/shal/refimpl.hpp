#pragma once

// Serial reference implementations. These are the oracles the parallel
// kernels are tested against and the baseline the benchmark compares with.
// Everything here runs single-threaded in double precision and favors the
// most literal formulation over speed.

#include <cstdint>
#include <vector>

#include "shal/image.hpp"

namespace shal::refimpl {

// sRGB byte triple -> CIELAB (unencoded: L in [0,100], a/b roughly [-128,127]).
void srgb_to_lab(uint8_t r, uint8_t g, uint8_t b, double& L, double& a, double& bb);

// CIELAB -> sRGB bytes, clamped to gamut and rounded to nearest.
void lab_to_srgb(double L, double a, double b, uint8_t& r, uint8_t& g, uint8_t& bb);

// Whole-image conversions in the 8-bit-scaled encoding; serial loops.
LabImage srgb_to_lab8(const RgbImage& img);
RgbImage lab8_to_srgb(const LabImage& img);

// Direct sliding-window cross-correlation. input [B,Cin,H,W] row-major,
// weight [Cout,Cin,kh,kw], bias [Cout]; returns [B,Cout,Hout,Wout].
std::vector<float> conv2d_naive(const std::vector<float>& input, int B, int Cin, int H, int W,
                                const std::vector<float>& weight, int Cout, int kh, int kw,
                                const std::vector<float>& bias, int stride, int padding,
                                int& Hout, int& Wout);

// Scatter-add transposed convolution. weight [Cin,Cout,kh,kw].
std::vector<float> conv_transpose2d_naive(const std::vector<float>& input, int B, int Cin, int H,
                                          int W, const std::vector<float>& weight, int Cout,
                                          int kh, int kw, const std::vector<float>& bias,
                                          int stride, int padding, int output_padding, int& Hout,
                                          int& Wout);

// Per (b,c) spatial standardization, population variance.
std::vector<float> instance_norm2d_naive(const std::vector<float>& input, int B, int C, int H,
                                         int W, const std::vector<float>& gamma,
                                         const std::vector<float>& beta, float eps);

}  // namespace shal::refimpl

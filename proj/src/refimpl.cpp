#include "shal/refimpl.hpp"

#include <algorithm>
#include <cmath>

namespace shal::refimpl {

namespace {

// sRGB <-> XYZ (D65), IEC 61966-2-1 transfer.
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};
constexpr double kXyzToRgb[3][3] = {
    {3.2404542, -1.5371385, -0.4985314},
    {-0.9692660, 1.8760108, 0.0415560},
    {0.0556434, -0.2040259, 1.0572252},
};
constexpr double kWhiteX = 0.95047;
constexpr double kWhiteY = 1.00000;
constexpr double kWhiteZ = 1.08883;

// CIE f() threshold, (6/29)^3
constexpr double kLabEps = 216.0 / 24389.0;

double srgb_to_linear(double c) {
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double linear_to_srgb(double c) {
    return c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

double lab_f(double t) {
    return t > kLabEps ? std::cbrt(t) : (24389.0 / 27.0 * t + 16.0) / 116.0;
}

double lab_f_inv(double u) {
    const double u3 = u * u * u;
    return u3 > kLabEps ? u3 : (116.0 * u - 16.0) * 27.0 / 24389.0;
}

}  // namespace

void srgb_to_lab(uint8_t r8, uint8_t g8, uint8_t b8, double& L, double& a, double& bb) {
    const double r = srgb_to_linear(r8 / 255.0);
    const double g = srgb_to_linear(g8 / 255.0);
    const double b = srgb_to_linear(b8 / 255.0);

    const double x = kRgbToXyz[0][0] * r + kRgbToXyz[0][1] * g + kRgbToXyz[0][2] * b;
    const double y = kRgbToXyz[1][0] * r + kRgbToXyz[1][1] * g + kRgbToXyz[1][2] * b;
    const double z = kRgbToXyz[2][0] * r + kRgbToXyz[2][1] * g + kRgbToXyz[2][2] * b;

    const double fx = lab_f(x / kWhiteX);
    const double fy = lab_f(y / kWhiteY);
    const double fz = lab_f(z / kWhiteZ);

    L = 116.0 * fy - 16.0;
    a = 500.0 * (fx - fy);
    bb = 200.0 * (fy - fz);
}

void lab_to_srgb(double L, double a, double b, uint8_t& r8, uint8_t& g8, uint8_t& b8) {
    const double fy = (L + 16.0) / 116.0;
    const double fx = fy + a / 500.0;
    const double fz = fy - b / 200.0;

    const double x = kWhiteX * lab_f_inv(fx);
    const double y = kWhiteY * lab_f_inv(fy);
    const double z = kWhiteZ * lab_f_inv(fz);

    double r = kXyzToRgb[0][0] * x + kXyzToRgb[0][1] * y + kXyzToRgb[0][2] * z;
    double g = kXyzToRgb[1][0] * x + kXyzToRgb[1][1] * y + kXyzToRgb[1][2] * z;
    double bl = kXyzToRgb[2][0] * x + kXyzToRgb[2][1] * y + kXyzToRgb[2][2] * z;

    r = std::clamp(linear_to_srgb(r), 0.0, 1.0);
    g = std::clamp(linear_to_srgb(g), 0.0, 1.0);
    bl = std::clamp(linear_to_srgb(bl), 0.0, 1.0);

    r8 = static_cast<uint8_t>(std::lround(r * 255.0));
    g8 = static_cast<uint8_t>(std::lround(g * 255.0));
    b8 = static_cast<uint8_t>(std::lround(bl * 255.0));
}

LabImage srgb_to_lab8(const RgbImage& img) {
    LabImage out(img.width, img.height);
    const size_t n = img.pixels();
    for (size_t i = 0; i < n; ++i) {
        double L, a, b;
        srgb_to_lab(img.data[i * 3], img.data[i * 3 + 1], img.data[i * 3 + 2], L, a, b);
        out.data[i * 3 + 0] = static_cast<float>(L * 255.0 / 100.0);
        out.data[i * 3 + 1] = static_cast<float>(a + 128.0);
        out.data[i * 3 + 2] = static_cast<float>(b + 128.0);
    }
    return out;
}

RgbImage lab8_to_srgb(const LabImage& img) {
    RgbImage out(img.width, img.height);
    const size_t n = img.pixels();
    for (size_t i = 0; i < n; ++i) {
        const double L = img.data[i * 3 + 0] * 100.0 / 255.0;
        const double a = img.data[i * 3 + 1] - 128.0;
        const double b = img.data[i * 3 + 2] - 128.0;
        lab_to_srgb(L, a, b, out.data[i * 3], out.data[i * 3 + 1], out.data[i * 3 + 2]);
    }
    return out;
}

std::vector<float> conv2d_naive(const std::vector<float>& input, int B, int Cin, int H, int W,
                                const std::vector<float>& weight, int Cout, int kh, int kw,
                                const std::vector<float>& bias, int stride, int padding,
                                int& Hout, int& Wout) {
    Hout = (H + 2 * padding - kh) / stride + 1;
    Wout = (W + 2 * padding - kw) / stride + 1;
    std::vector<float> out(static_cast<size_t>(B) * Cout * Hout * Wout, 0.f);
    for (int b = 0; b < B; ++b)
        for (int co = 0; co < Cout; ++co)
            for (int oh = 0; oh < Hout; ++oh)
                for (int ow = 0; ow < Wout; ++ow) {
                    double acc = bias.empty() ? 0.0 : bias[co];
                    for (int ci = 0; ci < Cin; ++ci)
                        for (int y = 0; y < kh; ++y)
                            for (int x = 0; x < kw; ++x) {
                                const int ih = oh * stride - padding + y;
                                const int iw = ow * stride - padding + x;
                                if (ih < 0 || ih >= H || iw < 0 || iw >= W) continue;
                                acc += static_cast<double>(
                                           input[((static_cast<size_t>(b) * Cin + ci) * H + ih) *
                                                     W +
                                                 iw]) *
                                       weight[((static_cast<size_t>(co) * Cin + ci) * kh + y) *
                                                  kw +
                                              x];
                            }
                    out[((static_cast<size_t>(b) * Cout + co) * Hout + oh) * Wout + ow] =
                        static_cast<float>(acc);
                }
    return out;
}

std::vector<float> conv_transpose2d_naive(const std::vector<float>& input, int B, int Cin, int H,
                                          int W, const std::vector<float>& weight, int Cout,
                                          int kh, int kw, const std::vector<float>& bias,
                                          int stride, int padding, int output_padding, int& Hout,
                                          int& Wout) {
    Hout = (H - 1) * stride - 2 * padding + kh + output_padding;
    Wout = (W - 1) * stride - 2 * padding + kw + output_padding;
    std::vector<double> acc(static_cast<size_t>(B) * Cout * Hout * Wout, 0.0);
    for (int b = 0; b < B; ++b)
        for (int ci = 0; ci < Cin; ++ci)
            for (int ih = 0; ih < H; ++ih)
                for (int iw = 0; iw < W; ++iw) {
                    const double v =
                        input[((static_cast<size_t>(b) * Cin + ci) * H + ih) * W + iw];
                    for (int co = 0; co < Cout; ++co)
                        for (int y = 0; y < kh; ++y)
                            for (int x = 0; x < kw; ++x) {
                                const int oh = ih * stride - padding + y;
                                const int ow = iw * stride - padding + x;
                                if (oh < 0 || oh >= Hout || ow < 0 || ow >= Wout) continue;
                                acc[((static_cast<size_t>(b) * Cout + co) * Hout + oh) * Wout +
                                    ow] +=
                                    v * weight[((static_cast<size_t>(ci) * Cout + co) * kh + y) *
                                                   kw +
                                               x];
                            }
                }
    std::vector<float> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        const int co = static_cast<int>(i / (static_cast<size_t>(Hout) * Wout)) % Cout;
        out[i] = static_cast<float>(acc[i] + (bias.empty() ? 0.0 : bias[co]));
    }
    return out;
}

std::vector<float> instance_norm2d_naive(const std::vector<float>& input, int B, int C, int H,
                                         int W, const std::vector<float>& gamma,
                                         const std::vector<float>& beta, float eps) {
    std::vector<float> out(input.size());
    const size_t hw = static_cast<size_t>(H) * W;
    for (int b = 0; b < B; ++b)
        for (int c = 0; c < C; ++c) {
            const float* src = input.data() + (static_cast<size_t>(b) * C + c) * hw;
            float* dst = out.data() + (static_cast<size_t>(b) * C + c) * hw;
            double sum = 0.0;
            for (size_t i = 0; i < hw; ++i) sum += src[i];
            const double mean = sum / static_cast<double>(hw);
            double var = 0.0;
            for (size_t i = 0; i < hw; ++i) {
                const double d = src[i] - mean;
                var += d * d;
            }
            var /= static_cast<double>(hw);
            const double inv = 1.0 / std::sqrt(var + eps);
            for (size_t i = 0; i < hw; ++i)
                dst[i] = static_cast<float>((src[i] - mean) * inv * gamma[c] + beta[c]);
        }
    return out;
}

}  // namespace shal::refimpl

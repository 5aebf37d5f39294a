#include "shal/colorlab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shal {

namespace {

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
constexpr double kLabEps = 216.0 / 24389.0;  // (6/29)^3

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

// gamma lookup for the 256 possible byte values
const std::array<double, 256>& linear_table() {
    static const std::array<double, 256> table = [] {
        std::array<double, 256> t{};
        for (int i = 0; i < 256; ++i) t[i] = srgb_to_linear(i / 255.0);
        return t;
    }();
    return table;
}

}  // namespace

ChannelStats channel_stats(const float* values, size_t n, size_t stride) {
    if (n == 0) throw std::invalid_argument("empty channel");
    // serial reduction; parallel partial sums would make the result depend on
    // the thread count
    double sum = 0.0;
    double mn = values[0], mx = values[0];
    for (size_t i = 0; i < n; ++i) {
        const double v = values[i * stride];
        sum += v;
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    const double mean = sum / static_cast<double>(n);
    double var = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double d = values[i * stride] - mean;
        var += d * d;
    }
    var /= static_cast<double>(n);
    return {mean, std::sqrt(var), mn, mx};
}

ChannelStats channel_stats(const LabImage& img, int channel) {
    if (img.pixels() == 0) throw std::invalid_argument("empty channel");
    return channel_stats(img.data.data() + channel, img.pixels(), 3);
}

RicaMode rica_mode_from_string(const std::string& s) {
    if (s == "step1") return RicaMode::Step1Only;
    if (s == "step2") return RicaMode::Step2Only;
    if (s == "both") return RicaMode::Both;
    throw std::invalid_argument("unknown rica mode: " + s);
}

std::string to_string(RicaMode m) {
    switch (m) {
        case RicaMode::Step1Only: return "step1";
        case RicaMode::Step2Only: return "step2";
        default: return "both";
    }
}

LabImage srgb_to_lab8(const RgbImage& img) {
    LabImage out(img.width, img.height);
    const auto& lin = linear_table();
    const int64_t n = static_cast<int64_t>(img.pixels());
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        const double r = lin[img.data[i * 3 + 0]];
        const double g = lin[img.data[i * 3 + 1]];
        const double b = lin[img.data[i * 3 + 2]];

        const double x = kRgbToXyz[0][0] * r + kRgbToXyz[0][1] * g + kRgbToXyz[0][2] * b;
        const double y = kRgbToXyz[1][0] * r + kRgbToXyz[1][1] * g + kRgbToXyz[1][2] * b;
        const double z = kRgbToXyz[2][0] * r + kRgbToXyz[2][1] * g + kRgbToXyz[2][2] * b;

        const double fx = lab_f(x / kWhiteX);
        const double fy = lab_f(y / kWhiteY);
        const double fz = lab_f(z / kWhiteZ);

        out.data[i * 3 + 0] = static_cast<float>((116.0 * fy - 16.0) * 255.0 / 100.0);
        out.data[i * 3 + 1] = static_cast<float>(500.0 * (fx - fy) + 128.0);
        out.data[i * 3 + 2] = static_cast<float>(200.0 * (fy - fz) + 128.0);
    }
    return out;
}

RgbImage lab8_to_srgb(const LabImage& img) {
    RgbImage out(img.width, img.height);
    const int64_t n = static_cast<int64_t>(img.pixels());
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        const double L = img.data[i * 3 + 0] * 100.0 / 255.0;
        const double a = img.data[i * 3 + 1] - 128.0;
        const double b = img.data[i * 3 + 2] - 128.0;

        const double fy = (L + 16.0) / 116.0;
        const double fx = fy + a / 500.0;
        const double fz = fy - b / 200.0;

        const double x = kWhiteX * lab_f_inv(fx);
        const double y = kWhiteY * lab_f_inv(fy);
        const double z = kWhiteZ * lab_f_inv(fz);

        const double r = kXyzToRgb[0][0] * x + kXyzToRgb[0][1] * y + kXyzToRgb[0][2] * z;
        const double g = kXyzToRgb[1][0] * x + kXyzToRgb[1][1] * y + kXyzToRgb[1][2] * z;
        const double bl = kXyzToRgb[2][0] * x + kXyzToRgb[2][1] * y + kXyzToRgb[2][2] * z;

        out.data[i * 3 + 0] =
            static_cast<uint8_t>(std::lround(std::clamp(linear_to_srgb(r), 0.0, 1.0) * 255.0));
        out.data[i * 3 + 1] =
            static_cast<uint8_t>(std::lround(std::clamp(linear_to_srgb(g), 0.0, 1.0) * 255.0));
        out.data[i * 3 + 2] =
            static_cast<uint8_t>(std::lround(std::clamp(linear_to_srgb(bl), 0.0, 1.0) * 255.0));
    }
    return out;
}

LabImage rica_step1(const LabImage& img, const RicaParams& params) {
    LabImage out(img.width, img.height);
    double mu_r[3], sigma_r[3];
    for (int c = 0; c < 3; ++c) {
        const ChannelStats s = channel_stats(img, c);
        mu_r[c] = s.mean;
        sigma_r[c] = std::max(s.stddev, kRicaSigmaFloor);
    }
    const int64_t n = static_cast<int64_t>(img.pixels());
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        for (int c = 0; c < 3; ++c) {
            const auto& p = params.ch[c];
            const double m =
                p.target_std * ((img.data[i * 3 + c] - mu_r[c]) / sigma_r[c]) + p.target_mean;
            out.data[i * 3 + c] = static_cast<float>(std::clamp(m, 0.0, 255.0));
        }
    }
    return out;
}

LabImage rica_step2(const LabImage& img, const RicaParams& params) {
    LabImage out(img.width, img.height);
    double mn[3], mx[3];
    for (int c = 0; c < 3; ++c) {
        const ChannelStats s = channel_stats(img, c);
        mn[c] = s.min;
        mx[c] = s.max;
    }
    const int64_t n = static_cast<int64_t>(img.pixels());
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        for (int c = 0; c < 3; ++c) {
            const auto& p = params.ch[c];
            double v;
            if (mx[c] == mn[c]) {
                v = p.range_start + p.range_span / 2.0;
            } else {
                const double q = (img.data[i * 3 + c] - mn[c]) / (mx[c] - mn[c]);
                v = q * p.range_span + p.range_start;
            }
            out.data[i * 3 + c] = static_cast<float>(v);
        }
    }
    return out;
}

RicaParams sample_rica_params(Rng& rng, const RicaRanges& ranges) {
    auto draw = [&rng](const Interval& iv) {
        if (iv.lo > iv.hi) throw std::invalid_argument("invalid range");
        return rng.uniform(iv.lo, iv.hi);
    };
    RicaParams p;
    for (int c = 0; c < 3; ++c) {
        p.ch[c].target_mean = draw(ranges.mean[c]);
        p.ch[c].target_std = draw(ranges.stddev[c]);
        p.ch[c].range_span = draw(ranges.span[c]);
        if (p.ch[c].range_span > 255.0) throw std::invalid_argument("invalid range");
        p.ch[c].range_start = rng.uniform(0.0, 255.0 - p.ch[c].range_span);
    }
    return p;
}

LabImage rica_apply(const LabImage& img, const RicaParams& params, RicaMode mode) {
    if (mode == RicaMode::Step1Only) return rica_step1(img, params);
    if (mode == RicaMode::Step2Only) return rica_step2(img, params);
    return rica_step2(rica_step1(img, params), params);
}

RgbImage rica_augment(const RgbImage& img, Rng& rng, const RicaRanges& ranges,
                      RicaParams* params_out) {
    const RicaParams params = sample_rica_params(rng, ranges);
    if (params_out) *params_out = params;
    return lab8_to_srgb(rica_apply(srgb_to_lab8(img), params, ranges.mode));
}

}  // namespace shal

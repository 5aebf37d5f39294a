#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "shal/image.hpp"
#include "shal/rng.hpp"

namespace shal {

// Channel indices into the encoded CIELAB triple.
enum Channel : int { CH_L = 0, CH_A = 1, CH_B = 2 };

constexpr double kRicaSigmaFloor = 1e-6;  // guards constant channels in step 1

struct ChannelStats {
    double mean = 0.0;
    double stddev = 0.0;  // population (divide by N)
    double min = 0.0;
    double max = 0.0;
};

// Mean / population-std / min / max of an encoded channel, double accumulation.
// Throws std::invalid_argument("empty channel") on an empty input.
ChannelStats channel_stats(const float* values, size_t n, size_t stride = 1);
ChannelStats channel_stats(const LabImage& img, int channel);

// Per-channel randomization parameters: target mean/std for step 1 and the
// target interval [T, T+S] for step 2.
struct RicaParams {
    struct PerChannel {
        double target_mean = 128.0;  // mu(M^c)
        double target_std = 32.0;    // sigma(M^c)
        double range_span = 255.0;   // S^c = N_max - N_min
        double range_start = 0.0;    // T^c = N_min
    };
    std::array<PerChannel, 3> ch;  // indexed by Channel
};

enum class RicaMode { Step1Only, Step2Only, Both };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Sampling intervals for the RICA parameters. Defaults are the published
// operating ranges: mu in [0,255] everywhere; sigma in [0,100] and S in
// [30,255] for L; sigma in [0,15] and S in [30,220] for A and B. T is drawn
// uniformly from [0, 255 - S] so the target interval stays encodable.
struct RicaRanges {
    std::array<Interval, 3> mean{{{0, 255}, {0, 255}, {0, 255}}};
    std::array<Interval, 3> stddev{{{0, 100}, {0, 15}, {0, 15}}};
    std::array<Interval, 3> span{{{30, 255}, {30, 220}, {30, 220}}};
    RicaMode mode = RicaMode::Both;
};

RicaMode rica_mode_from_string(const std::string& s);
std::string to_string(RicaMode m);

// Exact sRGB (IEC 61966-2-1, D65) -> CIELAB in the 8-bit-scaled encoding.
LabImage srgb_to_lab8(const RgbImage& img);

// Inverse conversion; out-of-gamut values clamp in sRGB, components round to
// nearest.
RgbImage lab8_to_srgb(const LabImage& img);

// Step 1: re-randomize per-channel mean/std, then clip to [0,255].
LabImage rica_step1(const LabImage& img, const RicaParams& params);

// Step 2: linearly remap each channel onto [T, T+S]. A constant channel maps
// to the interval midpoint T + S/2.
LabImage rica_step2(const LabImage& img, const RicaParams& params);

// Draw parameters uniformly from the configured intervals; deterministic
// given the rng state. Throws std::invalid_argument("invalid range") when an
// interval is empty (lo > hi).
RicaParams sample_rica_params(Rng& rng, const RicaRanges& ranges);

// Applies the steps enabled by `mode` to an encoded-LAB image.
LabImage rica_apply(const LabImage& img, const RicaParams& params, RicaMode mode);

// Full augmentation: to LAB, step 1 / step 2 per ranges.mode with freshly
// sampled parameters, back to sRGB. When `params_out` is non-null the sampled
// parameters are written there (manifest reporting).
RgbImage rica_augment(const RgbImage& img, Rng& rng, const RicaRanges& ranges,
                      RicaParams* params_out = nullptr);

}  // namespace shal

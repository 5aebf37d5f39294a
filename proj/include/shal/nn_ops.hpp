#pragma once

#include "shal/tensor.hpp"

namespace shal {

// Elementwise / reduction glue (all differentiable).
Tensor add(const Tensor& a, const Tensor& b);   // same shape
Tensor mul(const Tensor& a, const Tensor& b);   // same shape
Tensor scale(const Tensor& a, float s);
Tensor sum(const Tensor& a);                    // -> scalar
Tensor mean(const Tensor& a);                   // -> scalar

Tensor relu(const Tensor& x);
Tensor leaky_relu(const Tensor& x, float slope);
Tensor tanh(const Tensor& x);

// Cross-correlation. input [B,Cin,H,W], weight [Cout,Cin,kh,kw], bias [Cout]
// (pass an undefined Tensor for no bias). Hout = (H + 2p - kh)/stride + 1.
Tensor conv2d(const Tensor& input, const Tensor& weight, const Tensor& bias, int stride,
              int padding);

// Fractionally-strided convolution, the adjoint of conv2d for matching
// geometry. weight [Cin,Cout,kh,kw]; Hout = (H-1)*stride - 2p + kh + output_padding.
Tensor conv_transpose2d(const Tensor& input, const Tensor& weight, const Tensor& bias, int stride,
                        int padding, int output_padding = 0);

// Per-(b,c) spatial standardization with affine, population variance.
Tensor instance_norm2d(const Tensor& input, const Tensor& gamma, const Tensor& beta,
                       float eps = 1e-5f);

// Per spatial location channel softmax on [B,C,H,W].
Tensor softmax_over_channels(const Tensor& input);

// Zero padding / cropping of the two trailing spatial dims.
Tensor pad2d(const Tensor& input, int left, int right, int top, int bottom);
Tensor crop2d(const Tensor& input, int left, int right, int top, int bottom);

// Bilinear resize of [B,C,H,W] to (out_h, out_w), half-pixel centers.
Tensor upsample_bilinear2d(const Tensor& input, int out_h, int out_w);

}  // namespace shal

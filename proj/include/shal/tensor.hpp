#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "shal/rng.hpp"

namespace shal {

using Shape = std::vector<int>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

struct GradFn;

struct TensorData {
    Shape shape;
    std::vector<float> values;
    std::vector<float> grad;  // allocated lazily, same length as values
    bool requires_grad = false;
    std::shared_ptr<GradFn> grad_fn;
};

// Shared-handle dense float32 tensor participating in a reverse-mode graph.
// Ops that see an input with requires_grad (directly or through its creator)
// attach a GradFn to their output; backward() walks creators in reverse
// topological order.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, float value, bool requires_grad = false);
    static Tensor from_data(Shape shape, std::vector<float> values, bool requires_grad = false);
    static Tensor scalar(float value);
    static Tensor randn(Shape shape, Rng& rng, double stddev = 1.0, bool requires_grad = false);

    bool defined() const { return d_ != nullptr; }
    const Shape& shape() const { return d_->shape; }
    int dim(int i) const;
    int64_t numel() const { return static_cast<int64_t>(d_->values.size()); }

    std::span<float> data() { return d_->values; }
    std::span<const float> data() const { return d_->values; }
    float item() const;

    bool requires_grad() const { return d_->requires_grad; }
    void set_requires_grad(bool v) { d_->requires_grad = v; }

    // Lazily allocates a zero gradient buffer.
    std::span<float> grad();
    std::span<const float> grad() const;
    bool has_grad() const { return !d_->grad.empty(); }
    void zero_grad();

    // Same values, detached from the graph.
    Tensor detach() const;
    // Deep copy of values (no graph).
    Tensor clone() const;

    std::shared_ptr<GradFn> grad_fn() const { return d_->grad_fn; }
    void set_grad_fn(std::shared_ptr<GradFn> fn) { d_->grad_fn = std::move(fn); }
    TensorData* unsafe_ptr() const { return d_.get(); }

private:
    explicit Tensor(std::shared_ptr<TensorData> d) : d_(std::move(d)) {}
    std::shared_ptr<TensorData> d_;
};

struct GradFn {
    const char* name = "?";
    std::vector<Tensor> inputs;
    // Accumulates input gradients given the output tensor (whose grad buffer
    // is populated by the time this runs).
    std::function<void(const Tensor& out)> apply;
};

// True when an op consuming these inputs must record a node.
bool graph_needed(std::initializer_list<Tensor> inputs);

// Reverse-mode accumulation from a scalar loss. Gradients of leaves that the
// loss does not reach are left untouched (zero if freshly allocated).
// Throws std::invalid_argument on a non-scalar loss.
void backward(const Tensor& loss);

using NamedTensors = std::vector<std::pair<std::string, Tensor>>;

int64_t count_params(const NamedTensors& params);

}  // namespace shal

#include "shal/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace shal {

int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int e : s) n *= e;
    return n;
}

std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
}

namespace {
std::shared_ptr<TensorData> make_data(Shape shape, bool requires_grad) {
    auto d = std::make_shared<TensorData>();
    for (int e : shape)
        if (e <= 0) throw std::invalid_argument("non-positive extent in shape " + shape_str(shape));
    d->shape = std::move(shape);
    d->values.resize(static_cast<size_t>(shape_numel(d->shape)), 0.f);
    d->requires_grad = requires_grad;
    return d;
}
}  // namespace

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
    return Tensor(make_data(std::move(shape), requires_grad));
}

Tensor Tensor::full(Shape shape, float value, bool requires_grad) {
    Tensor t = zeros(std::move(shape), requires_grad);
    std::fill(t.data().begin(), t.data().end(), value);
    return t;
}

Tensor Tensor::from_data(Shape shape, std::vector<float> values, bool requires_grad) {
    auto d = std::make_shared<TensorData>();
    d->shape = std::move(shape);
    if (static_cast<int64_t>(values.size()) != shape_numel(d->shape))
        throw std::invalid_argument("data length " + std::to_string(values.size()) +
                                    " does not match shape " + shape_str(d->shape));
    d->values = std::move(values);
    d->requires_grad = requires_grad;
    return Tensor(std::move(d));
}

Tensor Tensor::scalar(float value) { return full({1}, value); }

Tensor Tensor::randn(Shape shape, Rng& rng, double stddev, bool requires_grad) {
    Tensor t = zeros(std::move(shape), requires_grad);
    for (float& v : t.data()) v = static_cast<float>(rng.normal(0.0, stddev));
    return t;
}

int Tensor::dim(int i) const {
    const int n = static_cast<int>(d_->shape.size());
    if (i < 0) i += n;
    if (i < 0 || i >= n) throw std::invalid_argument("dim index out of range");
    return d_->shape[i];
}

float Tensor::item() const {
    if (numel() != 1) throw std::invalid_argument("item() on non-scalar tensor " + shape_str(shape()));
    return d_->values[0];
}

std::span<float> Tensor::grad() {
    if (d_->grad.empty()) d_->grad.assign(d_->values.size(), 0.f);
    return d_->grad;
}

std::span<const float> Tensor::grad() const {
    if (d_->grad.empty()) d_->grad.assign(d_->values.size(), 0.f);
    return d_->grad;
}

void Tensor::zero_grad() {
    if (!d_->grad.empty()) std::fill(d_->grad.begin(), d_->grad.end(), 0.f);
}

Tensor Tensor::detach() const {
    auto d = std::make_shared<TensorData>();
    d->shape = d_->shape;
    d->values = d_->values;
    return Tensor(std::move(d));
}

Tensor Tensor::clone() const { return detach(); }

bool graph_needed(std::initializer_list<Tensor> inputs) {
    for (const Tensor& t : inputs)
        if (t.defined() && (t.requires_grad() || t.grad_fn())) return true;
    return false;
}

void backward(const Tensor& loss) {
    if (loss.numel() != 1) throw std::invalid_argument("backward() requires a scalar loss");

    // reverse topological order via iterative post-order DFS
    std::vector<Tensor> order;
    std::unordered_set<TensorData*> visited;
    struct Frame {
        Tensor t;
        size_t next_input = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({loss});
    visited.insert(loss.unsafe_ptr());
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto fn = f.t.grad_fn();
        if (fn && f.next_input < fn->inputs.size()) {
            Tensor next = fn->inputs[f.next_input++];
            if (next.defined() && next.grad_fn() && !visited.count(next.unsafe_ptr())) {
                visited.insert(next.unsafe_ptr());
                stack.push_back({next});
            }
        } else {
            order.push_back(f.t);
            stack.pop_back();
        }
    }

    Tensor seed = loss;
    seed.grad()[0] += 1.f;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto fn = it->grad_fn();
        if (fn && fn->apply) fn->apply(*it);
    }
}

int64_t count_params(const NamedTensors& params) {
    int64_t n = 0;
    for (const auto& [name, t] : params) n += t.numel();
    return n;
}

}  // namespace shal

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ebcle/tensor.hpp"

namespace ebcle {

// Named view over one parameter array and its gradient, for the optimizer
// and the finite-difference checks.
struct ParamView {
    std::string name;
    double* value = nullptr;
    double* grad = nullptr;
    std::size_t size = 0;
};

// 2D convolution with TensorFlow-style SAME padding (output ceil(in/stride),
// asymmetric padding when needed). Forward caches the im2col matrix so
// backward is two matrix products plus a col2im scatter.
class Conv2D {
public:
    Conv2D() = default;
    Conv2D(std::string name, int kh, int kw, int in_c, int out_c, int stride);

    void init_he_uniform(std::mt19937_64& rng);

    Tensor forward(const Tensor& x);
    // dy -> dx; accumulates weight/bias gradients.
    Tensor backward(const Tensor& dy);

    void zero_grad();
    std::vector<ParamView> params();

    int out_channels() const { return out_c_; }

private:
    std::string name_;
    int kh_ = 0, kw_ = 0, in_c_ = 0, out_c_ = 0, stride_ = 1;
    std::vector<double> w_;  // [kh*kw*in_c][out_c] row-major
    std::vector<double> b_;  // [out_c]
    std::vector<double> gw_, gb_;

    // forward cache
    int in_h_ = 0, in_w_ = 0, out_h_ = 0, out_w_ = 0, batch_ = 0;
    int pad_top_ = 0, pad_left_ = 0;
    std::vector<double> cols_; // [n*out_h*out_w][kh*kw*in_c]
};

class Dense {
public:
    Dense() = default;
    Dense(std::string name, int in_dim, int out_dim);

    void init_he_uniform(std::mt19937_64& rng);

    Tensor forward(const Tensor& x); // x: (n,1,1,in) -> (n,1,1,out)
    Tensor backward(const Tensor& dy);

    void zero_grad();
    std::vector<ParamView> params();

private:
    std::string name_;
    int in_dim_ = 0, out_dim_ = 0;
    std::vector<double> w_; // [in][out]
    std::vector<double> b_;
    std::vector<double> gw_, gb_;
    Tensor x_cache_;
};

// Stateless pieces.
Tensor relu_forward(const Tensor& x);
Tensor relu_backward(const Tensor& x, const Tensor& dy); // mask from cached input
Tensor add_forward(const Tensor& a, const Tensor& b);
Tensor global_avg_pool_forward(const Tensor& x);           // (n,h,w,c) -> (n,1,1,c)
Tensor global_avg_pool_backward(const Tensor& x, const Tensor& dy);

// Row-wise softmax of logits (n,1,1,k); rows sum to 1 within 1e-12.
Tensor softmax(const Tensor& logits);

// Mean cross-entropy over the batch and its gradient w.r.t. the logits.
struct LossGrad {
    double loss = 0.0;
    Tensor dlogits;
};
LossGrad softmax_cross_entropy(const Tensor& logits, std::span<const int> labels);

// C = A(BxK) * B(KxN), row-major, C preallocated/zeroed by caller.
void matmul_accumulate(const double* a, const double* b, double* c,
                       std::size_t m, std::size_t k, std::size_t n);

} // namespace ebcle

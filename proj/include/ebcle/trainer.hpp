#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebcle/image.hpp"
#include "ebcle/layers.hpp"
#include "ebcle/tensor.hpp"

namespace ebcle {

// Residual block without batchnorm: conv-relu-conv, shortcut add, relu.
// Entry blocks of stages 2/3 downsample with stride 2 and a 1x1 projection.
struct ResidualBlock {
    Conv2D conv1;
    Conv2D conv2;
    std::optional<Conv2D> projection;

    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);

    // forward caches
    Tensor x_in_, a1_, r1_, a2_, skip_, pre_relu_;
};

// Plain-conv ResNet for desk-scale training: stem conv + relu, three stages
// of (depth-2)/6 blocks at widths w/2w/4w, global average pool, dense head.
class MicroResNet {
public:
    MicroResNet(int depth, int width, int in_channels, int classes,
                std::uint64_t seed);

    Tensor forward(const Tensor& batch);
    // Runs forward, records loss, backpropagates into every parameter.
    double forward_backward(const Tensor& batch, std::span<const int> labels);

    void zero_grad();
    std::vector<ParamView> params();
    long long param_count();

    int depth() const { return depth_; }
    int width() const { return width_; }
    int classes() const { return classes_; }

    // Activation maps captured by the last forward pass (post-relu).
    const Tensor& first_conv_activation() const { return stem_act_; }
    const Tensor& last_conv_activation() const { return last_act_; }

private:
    int depth_ = 0, width_ = 0, in_channels_ = 0, classes_ = 0;
    Conv2D stem_;
    std::vector<ResidualBlock> blocks_;
    Dense fc_;

    Tensor stem_pre_, stem_act_, last_act_, pooled_;
};

struct AdamConfig {
    double lr = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

class Adam {
public:
    explicit Adam(const AdamConfig& cfg = {}) : cfg_(cfg) {}

    void step(std::span<ParamView> params);

private:
    AdamConfig cfg_;
    std::vector<std::vector<double>> m_, v_;
    long t_ = 0;
};

struct TrainConfig {
    AdamConfig adam;
    int batch_size = 128;
    int epochs = 1;
    std::uint64_t seed = 0;
    double train_fraction = 0.8; // remainder validates each epoch
};

struct RunRecord {
    std::string model_label;
    int depth = 0;
    int width = 0;
    std::uint64_t seed = 0;
    long long param_count = 0;
    int epochs = 0;
    std::vector<double> epoch_accuracies; // validation accuracy %, per epoch
    double final_test_accuracy = 0.0;     // held-out test split, %
    std::int64_t wall_time_ms = 1;
    std::string dataset;
    int train_count = 0;
    int test_count = 0;
};

// Deterministic single-threaded training run. Pixels are scaled by 1/255.
RunRecord train(int depth, int width, const ImageDataset& train_ds,
                const ImageDataset& test_ds, const TrainConfig& cfg);

double evaluate_accuracy(MicroResNet& net, const ImageDataset& ds, int batch_size = 128);

enum class LayerProbe { first, last };

// Entropy (nats) of the named conv layer's activation map on one batch.
double measure_layer_entropy(MicroResNet& net, const Tensor& batch, LayerProbe probe,
                             int bins = 256);

// NHWC batch of images scaled to [0,1], in dataset order starting at `offset`.
Tensor batch_from_dataset(const ImageDataset& ds, std::size_t offset, std::size_t count);

} // namespace ebcle

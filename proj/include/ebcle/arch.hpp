#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ebcle/planner.hpp"

namespace ebcle {

enum class LayerKind {
    input,
    conv,
    batchnorm,
    dense,
    pool,
    add,
    concat,
};

const char* to_string(LayerKind k);

struct LayerSpec {
    LayerKind kind = LayerKind::input;
    std::string label;
    int kh = 0, kw = 0;   // conv kernel
    int in_ch = 0, out_ch = 0;
    int stride = 1;
    int groups = 1;       // grouped-conv cardinality
    bool has_bias = false;
    bool on_skip = false; // projection conv on a shortcut; excluded from depth

    // conv: kh*kw*(in/groups)*out (+out); batchnorm: 2*out (gamma, beta);
    // dense: in*out+out or in*out; others: 0.
    long long param_count() const;
};

struct InputShape {
    int height = 0;
    int width = 0;
    int channels = 0;
};

struct ArchGraph {
    Family family = Family::resnet;
    std::vector<LayerSpec> layers;
    int depth = 0; // counted H': convs off the skip paths + dense layers
    long long total_params = 0;
};

// ResNet v1: biased 3x3 convs + batchnorm, stage widths w/2w/4w, stride-2
// entry blocks with a biased 1x1 projection (no batchnorm) on the shortcut.
struct ResnetOptions {
    bool conv_bias = true;
    bool projection_bias = true;
    bool dense_bias = true;
};

ArchGraph build_resnet_v1(int depth, int width, InputShape input, int classes,
                          const ResnetOptions& opt = {});

// Plain DenseNet (no bottleneck, no compression): bias-free convs, stem of
// stem_channels (2k when 0), equal-width 1x1 transitions, final batchnorm.
struct DensenetOptions {
    int num_blocks = 3;
    int stem_channels = 0; // 0 -> 2 * growth_rate
    bool conv_bias = false;
    bool dense_bias = true;
};

ArchGraph build_densenet(int depth, int growth_rate, InputShape input, int classes,
                         const DensenetOptions& opt = {});

// ResNeXt bottleneck stages. Stage s uses bottleneck width
// cardinality*width*2^s and block output twice that; 64-channel stem;
// bias-free convs and classifier.
struct ResnextOptions {
    int stem_channels = 64;
    bool conv_bias = false;
    bool dense_bias = false;
};

ArchGraph build_resnext(int depth, int width, int cardinality, InputShape input,
                        int classes, const ResnextOptions& opt = {});

// Exact integer sum of per-layer trainable parameters.
long long count_params(const ArchGraph& graph);

// Audit variant that also counts batchnorm running statistics (4 per channel
// instead of 2), the convention some framework summaries report as "total".
long long count_params_with_bn_stats(const ArchGraph& graph);

// Convs off the skip paths plus dense layers; the H' convention under which
// the family depth formulas are exact.
int counted_depth(const ArchGraph& graph);

// Builder dispatch used by the planner/CLI. cardinality and dense_blocks
// apply to the families that use them (<=0 selects the defaults 8 and 3).
ArchGraph build_family(Family family, int depth, int width, int cardinality,
                       int dense_blocks, InputShape input, int classes);

} // namespace ebcle

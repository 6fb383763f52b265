#pragma once

#include <cstdint>
#include <string>

namespace ebcle {

enum class Family {
    resnet,
    densenet,
    resnext,
};

const char* to_string(Family f);
Family family_from_string(const std::string& s);

// Depth bound derived from dataset entropy: delta_e = E(X) * ln 2, the
// natural-log form of ln(2^E). The block count is the ceiling of delta_e;
// the floor (never below 1) is kept for comparison.
struct EbcleEstimate {
    double entropy_nats = 0.0;
    double delta_e = 0.0;
    int n_upper = 1;
    int n_lower = 1;
};

EbcleEstimate ebcle(double entropy_nats);

struct ArchPlan {
    Family family = Family::resnet;
    int n_blocks = 0;
    int depth = 0;             // H'
    int breadth = 0;           // chi', 0 until assigned
    int depth_lower_bound = 0; // 8 / 7 / 11
    bool at_lower_bound = false;
};

// Depth formulas: ResNet v1 6N+2, DenseNet 3N+4, ResNeXt 9N+2, clamped up
// to the architectural lower bounds 8 / 7 / 11.
ArchPlan plan_depth(Family family, const EbcleEstimate& estimate, bool use_upper = true);

int depth_for_blocks(Family family, int n_blocks);
int depth_lower_bound(Family family);

// Dataset coarse kind used only to pick a default breadth.
enum class DatasetKind {
    simple,        // MNIST-like
    natural_32,    // CIFAR / STL scale
    natural_large, // ImageNet32 scale
};

const char* to_string(DatasetKind k);
DatasetKind dataset_kind_from_string(const std::string& s);

// Reference breadth choices: ResNet 24, DenseNet 20 (40 at natural_large),
// ResNeXt 16. Callers may always override.
int default_breadth(Family family, DatasetKind kind);

// Input compression bound: epsilon_max = sqrt((2^i_tx + log(1/delta)) / 2n).
// The delta term's logarithm base defaults to e and is parameterizable.
double compression_bound_epsilon(double i_tx, double delta, std::uint64_t n,
                                 double log_base = 2.718281828459045235);

// Classic hypothesis-count bound: sqrt((log_h + log(1/delta)) / 2n) where
// log_h is supplied by the caller in whatever base they chose.
double classic_bound(double log_h, double delta, std::uint64_t n,
                     double log_base = 2.718281828459045235);

} // namespace ebcle

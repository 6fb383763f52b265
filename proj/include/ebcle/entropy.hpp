#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ebcle/image.hpp"

namespace ebcle {

// How multichannel images feed the 256-bin histogram.
// flatten_all pools every channel into one histogram (default; this is what
// a whole-array histogram routine does to an interleaved RGB buffer).
// per_channel_mean computes one entropy per channel and averages.
enum class ChannelMode {
    flatten_all,
    per_channel_mean,
};

const char* to_string(ChannelMode mode);
ChannelMode channel_mode_from_string(const std::string& s);

// Shannon entropy of one image in nats. Zero-count bins contribute nothing.
double image_entropy(const Image& img, ChannelMode mode = ChannelMode::flatten_all);

struct EntropyReport {
    ChannelMode mode = ChannelMode::flatten_all;
    std::vector<double> per_image;      // nats, dataset order
    double mean_nats = 0.0;
    double mean_rounded = 0.0;          // 2 decimals, half away from zero
    double std_nats = 0.0;              // population std of per_image
    std::map<int, double> per_class_mean;
    double class_cv = 0.0;              // population cv of per-class means
};

EntropyReport dataset_entropy(const ImageDataset& ds,
                              ChannelMode mode = ChannelMode::flatten_all);

// Entropy of a real-valued activation map: values are quantized into `bins`
// equal-width buckets over [min, max], then treated as symbols. A constant
// tensor has zero entropy. NaN or Inf anywhere is a domain error.
double activation_entropy(std::span<const double> values, int bins = 256);

struct ClassSpread {
    double cv = 0.0;
    bool warn = false;
};

// Diagnostic only; never feeds back into planning.
ClassSpread class_spread(const EntropyReport& report, double cv_threshold = 0.25);

// Round half away from zero at the given number of decimals.
double round_half_away(double x, int decimals);

} // namespace ebcle

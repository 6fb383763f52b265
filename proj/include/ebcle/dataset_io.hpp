#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "ebcle/image.hpp"

namespace ebcle {

// MNIST IDX pair (big-endian headers, magic 0x00000803 / 0x00000801).
ImageDataset load_mnist_idx(const std::filesystem::path& images_path,
                            const std::filesystem::path& labels_path);

// CIFAR binary batches. Records are label_width + 3072 bytes with a
// channel-planar 32x32 RGB payload; label_width 1 = CIFAR-10,
// 2 = CIFAR-100 (coarse byte first, fine kept).
ImageDataset load_cifar_binary(const std::vector<std::filesystem::path>& paths,
                               int label_width);

// Directory of binary PGM (P5) / PPM (P6) files, one subdirectory per class.
// Class indices follow lexicographic subdirectory order.
ImageDataset load_pnm_dir(const std::filesystem::path& dir);

// Synthetic datasets: every pixel of a class-k image is drawn iid from that
// class's intensity table. Deterministic for a fixed (spec, seed).
struct SynthClassSpec {
    // (intensity, probability) entries; probabilities must sum to 1 (1e-9).
    std::vector<std::pair<std::uint8_t, double>> intensity_probs;
};

struct SynthSpec {
    int height = 8;
    int width = 8;
    int channels = 1;
    std::vector<SynthClassSpec> classes;
};

ImageDataset synth_dataset(const SynthSpec& spec, int n_per_class, std::uint64_t seed);

// Fixture writers for the loader round-trip contracts.
void write_mnist_idx(const ImageDataset& ds,
                     const std::filesystem::path& images_path,
                     const std::filesystem::path& labels_path);
void write_pnm_dir(const ImageDataset& ds, const std::filesystem::path& dir);

// Seeded shuffle, then the first n records. n <= 0 or n >= size returns a
// shuffled copy of everything. Fisher-Yates over std::mt19937_64 so the
// selection is identical across platforms.
ImageDataset take_subset(const ImageDataset& ds, int n, std::uint64_t seed);

} // namespace ebcle

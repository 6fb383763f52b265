#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ebcle {

// 8-bit raster image, channel-interleaved, row-major.
struct Image {
    int height = 0;
    int width = 0;
    int channels = 1; // 1 (grayscale) or 3 (RGB)
    std::vector<std::uint8_t> pixels;

    std::size_t pixel_count() const { return pixels.size(); }

    std::uint8_t at(int y, int x, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t& at(int y, int x, int c) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
};

// Uniform in-memory dataset: images plus class labels.
// Invariants (see validate()): images.size() == labels.size(),
// labels in [0, num_classes), all images share one shape.
struct ImageDataset {
    std::string name;
    std::vector<Image> images;
    std::vector<int> labels;
    int num_classes = 0;
    std::string split = "train"; // "train" | "test"

    std::size_t size() const { return images.size(); }
    int height() const { return images.empty() ? 0 : images.front().height; }
    int width() const { return images.empty() ? 0 : images.front().width; }
    int channels() const { return images.empty() ? 0 : images.front().channels; }

    // Throws Error{consistency} when an invariant is violated.
    void validate() const;
};

} // namespace ebcle

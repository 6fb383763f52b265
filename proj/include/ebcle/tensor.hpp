#pragma once

#include <cstddef>
#include <vector>

namespace ebcle {

// Dense 64-bit tensor, NHWC row-major. Vectors use h = w = 1.
struct Tensor {
    int n = 0, h = 0, w = 0, c = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(int n_, int h_, int w_, int c_)
        : n(n_), h(h_), w(w_), c(c_),
          v(static_cast<std::size_t>(n_) * h_ * w_ * c_, 0.0) {}

    std::size_t size() const { return v.size(); }

    double& at(int i, int y, int x, int ch) {
        return v[((static_cast<std::size_t>(i) * h + y) * w + x) * c + ch];
    }
    double at(int i, int y, int x, int ch) const {
        return v[((static_cast<std::size_t>(i) * h + y) * w + x) * c + ch];
    }

    bool same_shape(const Tensor& o) const {
        return n == o.n && h == o.h && w == o.w && c == o.c;
    }
};

} // namespace ebcle

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fht {

/// Accumulator cell type. 64-bit signed keeps every transform bit-exact.
using Accum = std::int64_t;

// Rectangular grid of accumulators, row-major with x fastest:
// data()[y * width() + x]. File I/O and tests all use this layout.
class Image {
public:
    Image() = default;

    Image(int width, int height)
        : w_(checked_width(width, height)), h_(height),
          data_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0) {}

    Image(int width, int height, std::vector<Accum> data)
        : w_(checked_width(width, height)), h_(height), data_(std::move(data)) {
        if (data_.size() != static_cast<std::size_t>(w_) * static_cast<std::size_t>(h_))
            throw std::invalid_argument("Image: data length does not equal width*height");
    }

    int width() const { return w_; }
    int height() const { return h_; }
    bool empty() const { return data_.empty(); }

    Accum operator()(int x, int y) const { return data_[index(x, y)]; }
    Accum& operator()(int x, int y) { return data_[index(x, y)]; }

    std::span<const Accum> row(int y) const {
        return {data_.data() + index(0, y), static_cast<std::size_t>(w_)};
    }
    std::span<Accum> row(int y) {
        return {data_.data() + index(0, y), static_cast<std::size_t>(w_)};
    }

    const std::vector<Accum>& data() const { return data_; }
    std::vector<Accum>& data() { return data_; }

    bool operator==(const Image&) const = default;

private:
    static int checked_width(int w, int h) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("Image: width and height must be positive");
        return w;
    }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(w_) +
               static_cast<std::size_t>(x);
    }

    int w_ = 0;
    int h_ = 0;
    std::vector<Accum> data_;
};

// A Hough image has the same shape as its source image; entry (t, s) holds
// the sum of input values along the slope-t pattern shifted down by s, with
// vertical wrap-around. Stored exactly like Image with x = t, y = s.
using HoughImage = Image;

} // namespace fht

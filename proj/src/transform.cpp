#include "fht/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace fht {

std::vector<Accum> rotate(std::span<const Accum> v, int r) {
    const int h = static_cast<int>(v.size());
    if (r < 0 || r >= h) throw std::invalid_argument("rotate: shift must lie in [0, h)");
    std::vector<Accum> out(v.size());
    for (int i = 0; i < h; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i + r) % h)];
    return out;
}

void check_overflow_budget(const Image& img) {
    std::uint64_t vmax = 0;
    for (const Accum v : img.data()) {
        // two's-complement abs, safe for INT64_MIN
        const std::uint64_t a = v < 0 ? 0u - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
        vmax = std::max(vmax, a);
    }
    const auto budget = static_cast<unsigned __int128>(1) << 62;
    if (static_cast<unsigned __int128>(img.width()) * vmax >= budget)
        throw std::overflow_error(
            "fht2d: width * max|value| reaches 2^62; sums could overflow 64-bit accumulators");
}

namespace {

// Recursive core on a column-major scratch layout (column x occupies cells
// [x*h, (x+1)*h)), so a width split is a split of the buffer and every merge
// row is contiguous. `out` receives the transform of `in`; `tmp` is scratch
// of the same size, and the roles swap one level down.
void transform_columns(std::span<const Accum> in, std::span<Accum> out, std::span<Accum> tmp,
                       int w, int h, SplitStrategy strategy, std::uint64_t& additions) {
    if (w == 1) {
        std::copy(in.begin(), in.end(), out.begin());
        return;
    }
    const auto [w0, w1] = split_width(w, strategy);
    const std::size_t left = static_cast<std::size_t>(w0) * static_cast<std::size_t>(h);
    transform_columns(in.first(left), tmp.first(left), out.first(left), w0, h, strategy, additions);
    transform_columns(in.subspan(left), tmp.subspan(left), out.subspan(left), w1, h, strategy, additions);

    for (int t = 0; t < w; ++t) {
        const auto t0 = round_half_up_ratio(static_cast<std::int64_t>(t) * (w0 - 1), w - 1);
        const auto t1 = round_half_up_ratio(static_cast<std::int64_t>(t) * (w1 - 1), w - 1);
        const int r = static_cast<int>((t - t1) % h);  // t1 <= t, so no negative operand
        const Accum* a = tmp.data() + static_cast<std::size_t>(t0) * h;
        const Accum* b = tmp.data() + (static_cast<std::size_t>(w0) + static_cast<std::size_t>(t1)) * h;
        Accum* dst = out.data() + static_cast<std::size_t>(t) * h;
        const int wrap = h - r;
        for (int s = 0; s < wrap; ++s) dst[s] = a[s] + b[s + r];
        for (int s = wrap; s < h; ++s) dst[s] = a[s] + b[s + r - h];
        additions += static_cast<std::uint64_t>(h);
    }
}

} // namespace

CountedTransform fht2d_counted(const Image& img, SplitStrategy strategy) {
    if (img.empty()) throw std::invalid_argument("fht2d: image is empty");
    check_overflow_budget(img);

    const int w = img.width();
    const int h = img.height();
    const std::size_t cells = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);

    std::vector<Accum> cols(cells);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            cols[static_cast<std::size_t>(x) * h + y] = img(x, y);

    std::vector<Accum> out(cells);
    std::vector<Accum> tmp(cells);
    std::uint64_t additions = 0;
    transform_columns(cols, out, tmp, w, h, strategy, additions);

    HoughImage hough(w, h);
    for (int t = 0; t < w; ++t)
        for (int s = 0; s < h; ++s)
            hough(t, s) = out[static_cast<std::size_t>(t) * h + s];
    return {std::move(hough), additions};
}

HoughImage fht2d(const Image& img, SplitStrategy strategy) {
    return fht2d_counted(img, strategy).hough;
}

} // namespace fht

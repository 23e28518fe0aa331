#include "fht/oracle.hpp"

#include <stdexcept>

#include "fht/transform.hpp"

namespace fht {

HoughImage slow_hough(const Image& img, SplitStrategy strategy) {
    if (img.empty()) throw std::invalid_argument("slow_hough: image is empty");
    check_overflow_budget(img);

    const int w = img.width();
    const int h = img.height();
    HoughImage hough(w, h);
    for (int t = 0; t < w; ++t) {
        const Pattern pat = fht2d_pattern(w, t, strategy);
        for (int s = 0; s < h; ++s) {
            Accum sum = 0;
            for (int x = 0; x < w; ++x) sum += img(x, (pat.values[static_cast<std::size_t>(x)] + s) % h);
            hough(t, s) = sum;
        }
    }
    return hough;
}

std::uint64_t count_additions_tree(int w, int h, SplitStrategy strategy) {
    if (w < 1 || h < 1) throw std::invalid_argument("count_additions_tree: sizes must be positive");
    if (w == 1) return 0;
    const auto [w0, w1] = split_width(w, strategy);
    return static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(h) +
           count_additions_tree(w0, h, strategy) + count_additions_tree(w1, h, strategy);
}

Rational line_error(int n, const Pattern& pat) {
    if (n < 1) throw std::invalid_argument("line_error: width must be positive");
    if (pat.n != n || static_cast<int>(pat.values.size()) != n)
        throw std::invalid_argument("line_error: pattern does not match width");
    if (n == 1) return Rational(0);

    // deviation at x is |x*t - pat(x)*(n-1)| / (n-1); maximize the integer
    // numerator, so ties never pass through floating point
    std::int64_t worst = 0;
    for (int x = 0; x < n; ++x) {
        std::int64_t d = static_cast<std::int64_t>(x) * pat.t -
                         static_cast<std::int64_t>(pat.values[static_cast<std::size_t>(x)]) * (n - 1);
        if (d < 0) d = -d;
        if (d > worst) worst = d;
    }
    return Rational(worst, n - 1);
}

} // namespace fht

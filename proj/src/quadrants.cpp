#include "fht/quadrants.hpp"

#include "fht/transform.hpp"

namespace fht {

Image flip_horizontal(const Image& img) {
    Image out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            out(x, y) = img(img.width() - 1 - x, y);
    return out;
}

Image transpose(const Image& img) {
    Image out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            out(y, x) = img(x, y);
    return out;
}

QuadrantSet fht2d_quadrants(const Image& img, SplitStrategy strategy,
                            std::uint64_t* total_additions) {
    const Image transposed = transpose(img);
    std::uint64_t additions = 0;

    QuadrantSet set;
    auto run = [&](const Image& input) {
        CountedTransform result = fht2d_counted(input, strategy);
        additions += result.additions;
        return std::move(result.hough);
    };
    set.horiz_pos = run(img);
    set.horiz_neg = run(flip_horizontal(img));
    set.vert_pos = run(transposed);
    set.vert_neg = run(flip_horizontal(transposed));

    if (total_additions) *total_additions = additions;
    return set;
}

} // namespace fht

#pragma once

#include <cstdint>

#include "fht/image.hpp"
#include "fht/split.hpp"

namespace fht {

/// result(x, y) = img(w-1-x, y)
Image flip_horizontal(const Image& img);
/// result(x, y) = img(y, x); swaps width and height
Image transpose(const Image& img);

// One Hough image per slope quadrant. The transform itself covers
// predominantly horizontal non-negative slopes; the other three quadrants
// come from transforming flipped/transposed copies of the input:
//
//   horiz_pos  fht2d(I)                        slope  t
//   horiz_neg  fht2d(flip_horizontal(I))       slope -t
//   vert_pos   fht2d(transpose(I))             slope  t, x and y swapped
//   vert_neg   fht2d(flip_horizontal(transpose(I)))
struct QuadrantSet {
    HoughImage horiz_pos;
    HoughImage horiz_neg;
    HoughImage vert_pos;
    HoughImage vert_neg;
};

/// If total_additions is non-null it receives the merge additions summed
/// over the four transforms.
QuadrantSet fht2d_quadrants(const Image& img, SplitStrategy strategy,
                            std::uint64_t* total_additions = nullptr);

} // namespace fht

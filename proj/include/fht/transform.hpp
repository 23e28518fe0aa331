#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fht/image.hpp"
#include "fht/split.hpp"

namespace fht {

/// Circular shift: result(i) = v((i + r) mod h). r must lie in [0, h).
std::vector<Accum> rotate(std::span<const Accum> v, int r);

/// Throws std::overflow_error unless width * max|value| < 2^62, the budget
/// that keeps every intermediate sum inside a signed 64-bit accumulator.
void check_overflow_budget(const Image& img);

struct CountedTransform {
    HoughImage hough;
    std::uint64_t additions = 0;  ///< scalar accumulator additions in merge steps
};

// Fast Hough (discrete Radon) transform for an arbitrary-size image.
// Recursively splits the width with the chosen strategy, transforms both
// slices, and merges each slope row t as
//
//   J(t, :) = J_left(t0, :) + rotate(J_right(t1, :), (t - t1) mod h)
//
// with t0, t1 the slopes of the sub-transforms obtained by round-half-up
// rescaling. The result satisfies, bit-exactly,
//
//   J(t, s) = sum_x I(x, (pat(x) + s) mod h)
//
// where pat is the slope-t generating pattern of the same strategy.
HoughImage fht2d(const Image& img, SplitStrategy strategy);

/// Same transform, also reporting the number of merge additions performed
/// (h per slope per non-leaf recursion node).
CountedTransform fht2d_counted(const Image& img, SplitStrategy strategy);

} // namespace fht

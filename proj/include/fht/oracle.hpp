#pragma once

#include <cstdint>

#include "fht/image.hpp"
#include "fht/pattern.hpp"
#include "fht/rational.hpp"
#include "fht/split.hpp"

namespace fht {

// Validation references. Deliberately slow and structure-free: no recursion
// sharing, so a bug in the fast path cannot hide here.

// Direct summation along every shifted pattern:
// J(t, s) = sum_x I(x, (pat(x) + s) mod h). Theta(w^2 h).
HoughImage slow_hough(const Image& img, SplitStrategy strategy);

// Merge additions the recursive transform performs on a w x h image:
// 0 for w = 1, else w*h plus both children. Independent of the transform's
// own instrumentation.
std::uint64_t count_additions_tree(int w, int h, SplitStrategy strategy);

// Peak vertical deviation of a pattern from its ideal line y = x*t/(n-1),
// as an exact rational (the deviations are multiples of 1/(n-1)).
Rational line_error(int n, const Pattern& pat);

} // namespace fht

#pragma once

#include <vector>

#include "fht/split.hpp"

namespace fht {

// Discrete approximation of the line y = x*t/(n-1) across columns 0..n-1.
// values[0] == 0 and values[n-1] == t always; values are never wrapped, the
// transform applies the mod-h wrap when it sums along a pattern.
struct Pattern {
    int n = 0;
    int t = 0;
    std::vector<int> values;
};

// Builds the slope-t generating pattern of the given strategy: split n,
// rescale the slope to both parts with round-half-up, recurse, then raise
// the right part by t - t_right and concatenate.
Pattern fht2d_pattern(int n, int t, SplitStrategy strategy);

/// All n generating patterns for width n, in slope order t = 0..n-1.
std::vector<Pattern> pattern_set(int n, SplitStrategy strategy);

} // namespace fht

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fht {

/// Width-splitting rule used by the recursive transform.
enum class SplitStrategy {
    Simple,  ///< bisect: (floor(w/2), ceil(w/2))
    Tweaked  ///< cut off the largest power of two below w
};

inline const char* to_string(SplitStrategy s) {
    return s == SplitStrategy::Simple ? "simple" : "tweaked";
}

inline SplitStrategy strategy_from_string(const std::string& name) {
    if (name == "simple") return SplitStrategy::Simple;
    if (name == "tweaked") return SplitStrategy::Tweaked;
    throw std::invalid_argument("unknown strategy '" + name + "' (expected simple|tweaked)");
}

/// floor(log2(n)) for n >= 1.
inline int floor_log2(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("floor_log2: argument must be positive");
    return std::bit_width(static_cast<std::uint64_t>(n)) - 1;
}

inline std::pair<int, int> split_simple(int w) {
    if (w < 2) throw std::invalid_argument("split_simple: width must be >= 2");
    return {w / 2, w - w / 2};
}

// First part is 2^(ceil(log2 w) - 1), i.e. the largest power of two
// strictly below w; the remainder can be as small as 1.
inline std::pair<int, int> split_tweaked(int w) {
    if (w < 2) throw std::invalid_argument("split_tweaked: width must be >= 2");
    const int p = 1 << (std::bit_width(static_cast<unsigned>(w - 1)) - 1);
    return {p, w - p};
}

inline std::pair<int, int> split_width(int w, SplitStrategy strategy) {
    return strategy == SplitStrategy::Simple ? split_simple(w) : split_tweaked(w);
}

// round(num/den) with ties rounded up, in exact integer arithmetic.
// Shared by the transform merge and the pattern builder so the two stay
// consistent cell for cell.
inline std::int64_t round_half_up_ratio(std::int64_t num, std::int64_t den) {
    if (den < 1) throw std::invalid_argument("round_half_up_ratio: denominator must be positive");
    if (num < 0) throw std::invalid_argument("round_half_up_ratio: numerator must be non-negative");
    return (2 * num + den) / (2 * den);
}

} // namespace fht

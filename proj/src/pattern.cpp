#include "fht/pattern.hpp"

#include <span>
#include <stdexcept>

namespace fht {

namespace {

void build_values(std::span<int> out, int n, int t, int lift, SplitStrategy strategy) {
    if (n == 1) {
        out[0] = lift;
        return;
    }
    const auto [n0, n1] = split_width(n, strategy);
    const int t0 = static_cast<int>(round_half_up_ratio(static_cast<std::int64_t>(t) * (n0 - 1), n - 1));
    const int t1 = static_cast<int>(round_half_up_ratio(static_cast<std::int64_t>(t) * (n1 - 1), n - 1));
    build_values(out.first(static_cast<std::size_t>(n0)), n0, t0, lift, strategy);
    build_values(out.subspan(static_cast<std::size_t>(n0)), n1, t1, lift + (t - t1), strategy);
}

} // namespace

Pattern fht2d_pattern(int n, int t, SplitStrategy strategy) {
    if (n < 1) throw std::invalid_argument("fht2d_pattern: width must be positive");
    if (t < 0 || t >= n) throw std::invalid_argument("fht2d_pattern: slope must lie in [0, n)");
    Pattern pat{n, t, std::vector<int>(static_cast<std::size_t>(n))};
    build_values(pat.values, n, t, 0, strategy);
    return pat;
}

std::vector<Pattern> pattern_set(int n, SplitStrategy strategy) {
    if (n < 1) throw std::invalid_argument("pattern_set: width must be positive");
    std::vector<Pattern> set;
    set.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) set.push_back(fht2d_pattern(n, t, strategy));
    return set;
}

} // namespace fht

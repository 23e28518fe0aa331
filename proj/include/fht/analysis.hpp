#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fht/rational.hpp"
#include "fht/split.hpp"

namespace fht {

struct ComplexityRecord {
    int n = 0;
    std::uint64_t f_simple = 0;   ///< merge additions, Simple split, n x n image
    std::uint64_t f_tweaked = 0;  ///< same for the Tweaked split
    std::optional<double> norm_simple;   ///< f / (n^2 log2 n); absent at n = 1
    std::optional<double> norm_tweaked;
};

struct ErrorRecord {
    int n = 0;
    Rational e_simple;   ///< max orthotropic error over the Simple pattern set
    Rational e_tweaked;  ///< same for the Tweaked pattern set
    Rational bound;      ///< tweaked_error_bound(n)
    std::optional<double> norm_simple;   ///< E / (log2(n)/6); absent at n = 1
    std::optional<double> norm_tweaked;
};

// Closed form for the Simple split's addition count on an n x n image:
// (floor(log2 n) + 2) n^2 - 2^(floor(log2 n)+1) n.
std::uint64_t closed_form_f_simple(int n);

// Exact upper bound on the Tweaked strategy's max orthotropic error:
// floor(log2 n)/6 + 1 - 2^(-floor(log2 n)).
Rational tweaked_error_bound(int n);

// Largest deviation between any slope-t pattern of width n and its ideal
// line, maximized over t. Theta(n^2); evaluated through pattern tables
// memoized per sub-width, bit-identical to running line_error over
// pattern_set(n).
Rational max_orthotropic_error(int n, SplitStrategy strategy);

/// Addition counts and normalizations for n = 1..n_max.
std::vector<ComplexityRecord> complexity_series(int n_max);

// Error records for n = 1..n_max. The sink is invoked in ascending n while
// computation is still running (work may be spread over several threads;
// threads = 0 picks a default). The whole sweep costs Theta(n_max^3).
void error_series(int n_max, const std::function<void(const ErrorRecord&)>& sink,
                  unsigned threads = 0);
std::vector<ErrorRecord> error_series(int n_max, unsigned threads = 0);

// Reduced sweep for fast runs: every n <= 1024 plus the sentinel sizes
// {1451, 2048, 4095, 4096}, all capped at n_max.
std::vector<int> fast_mode_sizes(int n_max);
void error_series_for(const std::vector<int>& sizes,
                      const std::function<void(const ErrorRecord&)>& sink,
                      unsigned threads = 0);

// Fraction of n in [1, n_max] whose Simple-strategy error exceeds
// tweaked_error_bound(n), as an exact rational.
Rational separation_fraction(int n_max, unsigned threads = 0);

} // namespace fht

#include "fht/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fht/oracle.hpp"

namespace fht {

std::uint64_t closed_form_f_simple(int n) {
    if (n < 1) throw std::invalid_argument("closed_form_f_simple: n must be positive");
    const int q = floor_log2(n);
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    return (static_cast<std::uint64_t>(q) + 2) * nn * nn - (std::uint64_t{1} << (q + 1)) * nn;
}

Rational tweaked_error_bound(int n) {
    if (n < 1) throw std::invalid_argument("tweaked_error_bound: n must be positive");
    const int q = floor_log2(n);
    const std::int64_t p = std::int64_t{1} << q;  // q <= 30 for int n
    return Rational(q * p + 6 * p - 6, 6 * p);
}

namespace {

// All patterns of one width, row t at [t*m, t*m + m). Widths reached from a
// given root repeat heavily (halves for Simple, powers of two plus a short
// residual chain for Tweaked), so tables are memoized per width; total work
// and storage stay O(n^2).
using PatternTable = std::vector<std::int32_t>;

const PatternTable& width_table(int m, SplitStrategy strategy, std::map<int, PatternTable>& memo) {
    if (const auto it = memo.find(m); it != memo.end()) return it->second;

    PatternTable table(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    if (m > 1) {
        const auto [m0, m1] = split_width(m, strategy);
        const PatternTable& left = width_table(m0, strategy, memo);
        const PatternTable& right = width_table(m1, strategy, memo);
        for (int t = 0; t < m; ++t) {
            const auto t0 = round_half_up_ratio(static_cast<std::int64_t>(t) * (m0 - 1), m - 1);
            const auto t1 = round_half_up_ratio(static_cast<std::int64_t>(t) * (m1 - 1), m - 1);
            const auto lift = static_cast<std::int32_t>(t - t1);
            std::int32_t* row = table.data() + static_cast<std::size_t>(t) * m;
            const std::int32_t* lrow = left.data() + static_cast<std::size_t>(t0) * m0;
            std::copy(lrow, lrow + m0, row);
            const std::int32_t* rrow = right.data() + static_cast<std::size_t>(t1) * m1;
            for (int j = 0; j < m1; ++j) row[m0 + j] = rrow[j] + lift;
        }
    }
    return memo.emplace(m, std::move(table)).first->second;
}

// max over t and x of |x*t - pat(n,t)(x)*(n-1)|; the error is this / (n-1).
// Top-level pattern rows are scanned straight out of the two child tables
// instead of being materialized.
std::int64_t max_deviation_numerator(int n, SplitStrategy strategy) {
    if (n == 1) return 0;
    const auto [m0, m1] = split_width(n, strategy);
    std::map<int, PatternTable> memo;
    const PatternTable& left = width_table(m0, strategy, memo);
    const PatternTable& right = width_table(m1, strategy, memo);

    const auto nm1 = static_cast<std::int64_t>(n) - 1;
    std::int64_t worst = 0;
    for (int t = 0; t < n; ++t) {
        const auto t0 = round_half_up_ratio(static_cast<std::int64_t>(t) * (m0 - 1), nm1);
        const auto t1 = round_half_up_ratio(static_cast<std::int64_t>(t) * (m1 - 1), nm1);
        const std::int64_t lift = t - t1;
        const std::int32_t* lrow = left.data() + static_cast<std::size_t>(t0) * m0;
        const std::int32_t* rrow = right.data() + static_cast<std::size_t>(t1) * m1;
        std::int64_t xt = 0;  // x * t, advanced incrementally
        for (int x = 0; x < m0; ++x, xt += t) {
            std::int64_t d = xt - static_cast<std::int64_t>(lrow[x]) * nm1;
            if (d < 0) d = -d;
            if (d > worst) worst = d;
        }
        for (int j = 0; j < m1; ++j, xt += t) {
            std::int64_t d = xt - (static_cast<std::int64_t>(rrow[j]) + lift) * nm1;
            if (d < 0) d = -d;
            if (d > worst) worst = d;
        }
    }
    return worst;
}

unsigned pick_threads(unsigned requested, std::size_t jobs) {
    unsigned t = requested;
    if (t == 0) {
        // the per-thread pattern tables are tens of MB near n = 4096; cap the
        // default so peak memory stays bounded
        t = std::min(std::thread::hardware_concurrency(), 8u);
        if (t == 0) t = 1;
    }
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

// Runs compute(inputs[k]) on a small worker pool and hands results to emit
// in input order; whichever worker fills the gap drains the ready prefix.
template <typename Result>
void parallel_ordered(const std::vector<int>& inputs, unsigned threads,
                      const std::function<Result(int)>& compute,
                      const std::function<void(const Result&)>& emit) {
    const std::size_t count = inputs.size();
    threads = pick_threads(threads, count);
    if (threads <= 1) {
        for (const int v : inputs) emit(compute(v));
        return;
    }

    std::vector<std::optional<Result>> done(count);
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::size_t emitted = 0;
    std::exception_ptr failure;

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= count) return;
                try {
                    Result r = compute(inputs[k]);
                    std::lock_guard<std::mutex> lock(mu);
                    done[k] = std::move(r);
                    while (emitted < count && done[emitted].has_value()) {
                        emit(*done[emitted]);
                        done[emitted].reset();
                        ++emitted;
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!failure) failure = std::current_exception();
                    next.store(count);  // stop handing out work
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

ErrorRecord make_error_record(int n) {
    ErrorRecord rec;
    rec.n = n;
    const std::int64_t den = n == 1 ? 1 : n - 1;
    rec.e_simple = Rational(max_deviation_numerator(n, SplitStrategy::Simple), den);
    rec.e_tweaked = Rational(max_deviation_numerator(n, SplitStrategy::Tweaked), den);
    rec.bound = tweaked_error_bound(n);
    if (n > 1) {
        const double scale = 6.0 / std::log2(static_cast<double>(n));
        rec.norm_simple = rec.e_simple.to_double() * scale;
        rec.norm_tweaked = rec.e_tweaked.to_double() * scale;
    }
    return rec;
}

std::vector<int> ascending_sizes(int n_max) {
    std::vector<int> sizes(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) sizes[static_cast<std::size_t>(n) - 1] = n;
    return sizes;
}

} // namespace

Rational max_orthotropic_error(int n, SplitStrategy strategy) {
    if (n < 1) throw std::invalid_argument("max_orthotropic_error: n must be positive");
    return Rational(max_deviation_numerator(n, strategy), n == 1 ? 1 : n - 1);
}

std::vector<ComplexityRecord> complexity_series(int n_max) {
    if (n_max < 1) throw std::invalid_argument("complexity_series: n_max must be positive");
    std::vector<ComplexityRecord> records;
    records.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        ComplexityRecord rec;
        rec.n = n;
        rec.f_simple = count_additions_tree(n, n, SplitStrategy::Simple);
        rec.f_tweaked = count_additions_tree(n, n, SplitStrategy::Tweaked);
        if (n > 1) {
            const double denom =
                static_cast<double>(n) * static_cast<double>(n) * std::log2(static_cast<double>(n));
            rec.norm_simple = static_cast<double>(rec.f_simple) / denom;
            rec.norm_tweaked = static_cast<double>(rec.f_tweaked) / denom;
        }
        records.push_back(rec);
    }
    return records;
}

void error_series_for(const std::vector<int>& sizes,
                      const std::function<void(const ErrorRecord&)>& sink, unsigned threads) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("error_series: sizes must be positive");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("error_series: sizes must be strictly ascending");
    }
    parallel_ordered<ErrorRecord>(sizes, threads, make_error_record, sink);
}

void error_series(int n_max, const std::function<void(const ErrorRecord&)>& sink, unsigned threads) {
    if (n_max < 1) throw std::invalid_argument("error_series: n_max must be positive");
    error_series_for(ascending_sizes(n_max), sink, threads);
}

std::vector<ErrorRecord> error_series(int n_max, unsigned threads) {
    std::vector<ErrorRecord> records;
    records.reserve(static_cast<std::size_t>(n_max));
    error_series(n_max, [&](const ErrorRecord& rec) { records.push_back(rec); }, threads);
    return records;
}

std::vector<int> fast_mode_sizes(int n_max) {
    if (n_max < 1) throw std::invalid_argument("fast_mode_sizes: n_max must be positive");
    std::vector<int> sizes;
    for (int n = 1; n <= std::min(n_max, 1024); ++n) sizes.push_back(n);
    for (const int sentinel : {1451, 2048, 4095, 4096})
        if (sentinel <= n_max) sizes.push_back(sentinel);
    return sizes;
}

Rational separation_fraction(int n_max, unsigned threads) {
    if (n_max < 1) throw std::invalid_argument("separation_fraction: n_max must be positive");
    std::int64_t exceeding = 0;
    parallel_ordered<bool>(
        ascending_sizes(n_max), threads,
        [](int n) {
            const Rational e_simple(max_deviation_numerator(n, SplitStrategy::Simple),
                                    n == 1 ? 1 : n - 1);
            return e_simple > tweaked_error_bound(n);
        },
        [&](const bool& exceeds) { exceeding += exceeds ? 1 : 0; });
    return Rational(exceeding, n_max);
}

} // namespace fht

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fht/analysis.hpp"
#include "fht/csv.hpp"
#include "fht/pattern.hpp"
#include "fht/pgm.hpp"
#include "fht/quadrants.hpp"
#include "fht/raster.hpp"
#include "fht/transform.hpp"

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// "dir/out.fht1" + "hpos" -> "dir/out.hpos.fht1"; no extension -> "out.hpos"
std::string suffixed_path(const std::string& path, const std::string& tag) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "." + tag;
    return path.substr(0, dot) + "." + tag + path.substr(dot);
}

// Hough image as text: one line per shift s, slope columns t = 0..w-1.
void write_hough_csv(const std::string& path, const fht::HoughImage& hough) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (int s = 0; s < hough.height(); ++s) {
        for (int t = 0; t < hough.width(); ++t) {
            if (t) out << ',';
            out << hough(t, s);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_output(const std::string& path, const fht::HoughImage& hough) {
    if (ends_with(path, ".csv"))
        write_hough_csv(path, hough);
    else
        fht::write_raster(path, hough);
}

int run_transform(const std::string& input, const std::string& output,
                  fht::SplitStrategy strategy, bool count, bool quadrants) {
    const fht::Image img = fht::read_pgm(input);
    std::uint64_t additions = 0;
    if (quadrants) {
        const fht::QuadrantSet set = fht::fht2d_quadrants(img, strategy, &additions);
        write_output(suffixed_path(output, "hpos"), set.horiz_pos);
        write_output(suffixed_path(output, "hneg"), set.horiz_neg);
        write_output(suffixed_path(output, "vpos"), set.vert_pos);
        write_output(suffixed_path(output, "vneg"), set.vert_neg);
    } else {
        fht::CountedTransform result = fht::fht2d_counted(img, strategy);
        additions = result.additions;
        write_output(output, result.hough);
    }
    if (count) std::cout << additions << "\n";
    return 0;
}

int run_pattern(int n, int t, fht::SplitStrategy strategy) {
    const fht::Pattern pat = fht::fht2d_pattern(n, t, strategy);
    for (int x = 0; x < pat.n; ++x) {
        if (x) std::cout << ',';
        std::cout << pat.values[static_cast<std::size_t>(x)];
    }
    std::cout << "\n";
    return 0;
}

int run_analyze(const std::string& mode, int n_max, bool fast, const std::string& output) {
    std::ofstream out(output, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + output + "' for writing");

    if (mode == "complexity") {
        const auto records = fht::complexity_series(n_max);
        fht::write_complexity_csv(out, records);
    } else {
        std::vector<int> sizes;
        if (fast) {
            sizes = fht::fast_mode_sizes(n_max);
        } else {
            for (int n = 1; n <= n_max; ++n) sizes.push_back(n);
        }
        fht::write_error_header(out);
        std::int64_t exceeding = 0;
        fht::error_series_for(sizes, [&](const fht::ErrorRecord& rec) {
            fht::write_error_row(out, rec);
            if (rec.e_simple > rec.bound) ++exceeding;
        });
        // fraction of evaluated sizes whose Simple error exceeds the bound
        // (over all of [1, n_max] unless --fast trimmed the sweep)
        const fht::Rational fraction(exceeding, static_cast<std::int64_t>(sizes.size()));
        std::cout << fht::format_significant(fraction.to_double()) << "\n";
    }
    if (!out) throw std::runtime_error("write failed for '" + output + "'");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fht2d: fast Hough (discrete Radon) transform for images of arbitrary size"};
    app.require_subcommand(1);

    std::string input, output, strategy_name = "simple";
    bool count = false, quadrants = false;

    CLI::App* transform = app.add_subcommand("transform", "Transform a PGM image into Hough space");
    transform->add_option("--input", input, "input image, PGM P2 or P5, maxval <= 65535")->required();
    transform
        ->add_option("--strategy", strategy_name, "width split rule: simple (bisect) or tweaked (cut largest power of two)")
        ->required()
        ->check(CLI::IsMember({"simple", "tweaked"}));
    transform
        ->add_option("--output", output,
                     "output path; a .csv extension emits text (one line per shift s), anything "
                     "else the FHT1 binary raster")
        ->required();
    transform->add_flag("--count", count, "print the number of merge additions to stdout");
    transform->add_flag(
        "--quadrants", quadrants,
        "emit all four slope quadrants as <output>.{hpos,hneg,vpos,vneg}; hneg row t is slope -t "
        "of the original image (horizontal flip), vpos/vneg swap x and y (transpose)");

    int pat_n = 0, pat_t = 0;
    CLI::App* pattern = app.add_subcommand("pattern", "Print one generating pattern as CSV");
    pattern->add_option("--n", pat_n, "pattern width")->required()->check(CLI::PositiveNumber);
    pattern->add_option("--t", pat_t, "slope index in [0, n)")->required();
    pattern->add_option("--strategy", strategy_name, "simple|tweaked")
        ->required()
        ->check(CLI::IsMember({"simple", "tweaked"}));

    std::string analyze_mode;
    int n_max = 0;
    bool fast = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Emit complexity or accuracy series as CSV; the error mode also prints the "
                   "fraction of sizes whose simple-split error exceeds the tweaked error bound");
    analyze->add_option("mode", analyze_mode, "complexity|error")
        ->required()
        ->check(CLI::IsMember({"complexity", "error"}));
    analyze->add_option("--n-max", n_max, "largest image size to evaluate")
        ->required()
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--fast", fast,
                      "error mode: evaluate n <= 1024 plus sentinels {1451, 2048, 4095, 4096} "
                      "instead of every n");
    analyze->add_option("--output", output, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed())
            return run_transform(input, output, fht::strategy_from_string(strategy_name), count,
                                 quadrants);
        if (pattern->parsed())
            return run_pattern(pat_n, pat_t, fht::strategy_from_string(strategy_name));
        if (analyze->parsed()) return run_analyze(analyze_mode, n_max, fast, output);
    } catch (const std::exception& e) {
        std::cerr << "fht2d: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

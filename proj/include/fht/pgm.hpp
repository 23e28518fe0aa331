#pragma once

#include <iosfwd>
#include <string>

#include "fht/image.hpp"

namespace fht {

// Reads a PGM image (P2 ASCII or P5 binary, maxval up to 65535) and widens
// the samples to accumulators. Pixel (x, y) is column x of row y, rows top
// to bottom, matching Image's layout. Throws std::runtime_error with a
// descriptive message on malformed, truncated or unsupported input.
Image read_pgm(std::istream& in);
Image read_pgm(const std::string& path);

} // namespace fht

#pragma once

#include <iosfwd>
#include <string>

#include "fht/image.hpp"

namespace fht {

// FHT1 binary raster: the bit-exact on-disk form of an Image or Hough image.
//
//   offset  size  field
//   0       4     magic "FHT1"
//   4       4     width, unsigned little-endian
//   8       4     height, unsigned little-endian
//   12      1     dtype code (0 = signed 64-bit integer)
//   13      8*w*h payload, little-endian, x fastest, row-major
//
// read_raster(write_raster(img)) == img, bit for bit.

void write_raster(std::ostream& out, const Image& img);
void write_raster(const std::string& path, const Image& img);

Image read_raster(std::istream& in);
Image read_raster(const std::string& path);

} // namespace fht

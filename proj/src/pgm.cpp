#include "fht/pgm.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <stdexcept>
#include <string>

namespace fht {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error("pgm: " + what); }

// Skips whitespace and '#' comments (which run to end of line), then parses
// one non-negative decimal number.
long read_header_number(std::istream& in, const char* what) {
    int c = in.get();
    while (c != std::istream::traits_type::eof()) {
        if (c == '#') {
            while (c != '\n' && c != std::istream::traits_type::eof()) c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == std::istream::traits_type::eof()) fail(std::string("unexpected end of file before ") + what);
    if (c < '0' || c > '9') fail(std::string("malformed ") + what);
    long value = 0;
    while (c >= '0' && c <= '9') {
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000L) fail(std::string(what) + " out of range");
        c = in.get();
    }
    if (c != std::istream::traits_type::eof()) in.unget();
    return value;
}

} // namespace

Image read_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5'))
        fail("not a PGM file (expected P2 or P5 magic)");
    const bool binary = magic[1] == '5';

    const long w = read_header_number(in, "width");
    const long h = read_header_number(in, "height");
    const long maxval = read_header_number(in, "maxval");
    if (w < 1 || h < 1) fail("width and height must be positive");
    if (w * h > (1L << 30)) fail("image too large");
    if (maxval < 1 || maxval > 65535) fail("unsupported maxval " + std::to_string(maxval));

    Image img(static_cast<int>(w), static_cast<int>(h));
    const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);

    if (binary) {
        const int c = in.get();  // exactly one whitespace byte separates header and raster
        if (c == std::istream::traits_type::eof() || !std::isspace(c))
            fail("missing whitespace before binary raster");
        const int bytes_per_sample = maxval > 255 ? 2 : 1;
        std::string raw(count * static_cast<std::size_t>(bytes_per_sample), '\0');
        in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
        if (in.gcount() != static_cast<std::streamsize>(raw.size())) fail("truncated raster payload");
        for (std::size_t i = 0; i < count; ++i) {
            long v;
            if (bytes_per_sample == 1) {
                v = static_cast<unsigned char>(raw[i]);
            } else {
                // two-byte samples are big-endian
                v = static_cast<long>(static_cast<unsigned char>(raw[2 * i])) * 256 +
                    static_cast<unsigned char>(raw[2 * i + 1]);
            }
            if (v > maxval) fail("sample exceeds maxval");
            img.data()[i] = static_cast<Accum>(v);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = read_header_number(in, "sample");
            if (v > maxval) fail("sample exceeds maxval");
            img.data()[i] = static_cast<Accum>(v);
        }
    }
    return img;
}

Image read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("pgm: cannot open '" + path + "'");
    return read_pgm(in);
}

} // namespace fht

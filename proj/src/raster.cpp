#include "fht/raster.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace fht {

namespace {

constexpr char kMagic[4] = {'F', 'H', 'T', '1'};
constexpr std::uint8_t kDtypeInt64 = 0;

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error("raster: " + what); }

void put_u32le(std::ostream& out, std::uint32_t v) {
    const std::array<char, 4> b = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                                   static_cast<char>((v >> 16) & 0xff),
                                   static_cast<char>((v >> 24) & 0xff)};
    out.write(b.data(), b.size());
}

void put_i64le(std::ostream& out, std::int64_t v) {
    const auto u = static_cast<std::uint64_t>(v);
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((u >> (8 * i)) & 0xff);
    out.write(b.data(), b.size());
}

std::uint32_t get_u32le(std::istream& in, const char* what) {
    std::array<char, 4> b;
    in.read(b.data(), b.size());
    if (in.gcount() != 4) fail(std::string("truncated ") + what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i)
        v = (v << 8) | static_cast<unsigned char>(b[static_cast<std::size_t>(i)]);
    return v;
}

} // namespace

void write_raster(std::ostream& out, const Image& img) {
    if (img.empty()) fail("refusing to write an empty image");
    out.write(kMagic, 4);
    put_u32le(out, static_cast<std::uint32_t>(img.width()));
    put_u32le(out, static_cast<std::uint32_t>(img.height()));
    out.put(static_cast<char>(kDtypeInt64));
    for (const Accum v : img.data()) put_i64le(out, v);
    if (!out) fail("write failed");
}

void write_raster(const std::string& path, const Image& img) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot open '" + path + "' for writing");
    write_raster(out, img);
}

Image read_raster(std::istream& in) {
    char magic[4] = {0, 0, 0, 0};
    in.read(magic, 4);
    if (in.gcount() != 4 || !std::equal(magic, magic + 4, kMagic)) fail("bad magic");
    const std::uint32_t w = get_u32le(in, "width");
    const std::uint32_t h = get_u32le(in, "height");
    const int dtype = in.get();
    if (dtype == std::istream::traits_type::eof()) fail("truncated header");
    if (dtype != kDtypeInt64) fail("unsupported dtype code " + std::to_string(dtype));
    if (w < 1 || h < 1) fail("width and height must be positive");
    if (static_cast<std::uint64_t>(w) * h > (std::uint64_t{1} << 30)) fail("image too large");

    Image img(static_cast<int>(w), static_cast<int>(h));
    const std::size_t count = static_cast<std::size_t>(w) * h;
    std::string raw(count * 8, '\0');
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) fail("truncated payload");
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t u = 0;
        for (int b = 7; b >= 0; --b)
            u = (u << 8) | static_cast<unsigned char>(raw[i * 8 + static_cast<std::size_t>(b)]);
        img.data()[i] = static_cast<Accum>(u);
    }
    if (in.peek() != std::istream::traits_type::eof()) fail("trailing bytes after payload");
    return img;
}

Image read_raster(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open '" + path + "'");
    return read_raster(in);
}

} // namespace fht

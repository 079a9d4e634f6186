#include "wf/wdt.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "wf/error.hpp"

namespace wf {

static_assert(std::endian::native == std::endian::little,
              "wdt serialization assumes a little-endian host");

namespace {
constexpr char kMagic[4] = {'W', 'D', 'T', '1'};
constexpr std::uint8_t kDtypeF32 = 0;
} // namespace

void write_wdt(const std::filesystem::path& path, const Tensor& t) {
    if (t.ndim() == 0 || t.ndim() > 255) throw ShapeError("wdt: unsupported ndim");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("wdt: cannot open for writing: " + path.string());
    out.write(kMagic, 4);
    const std::uint8_t dtype = kDtypeF32;
    const std::uint8_t ndim = static_cast<std::uint8_t>(t.ndim());
    out.write(reinterpret_cast<const char*>(&dtype), 1);
    out.write(reinterpret_cast<const char*>(&ndim), 1);
    for (int d : t.shape) {
        const std::uint32_t v = static_cast<std::uint32_t>(d);
        out.write(reinterpret_cast<const char*>(&v), 4);
    }
    out.write(reinterpret_cast<const char*>(t.ptr()), static_cast<std::streamsize>(t.numel() * 4));
    if (!out) throw IoError("wdt: write failed: " + path.string());
}

Tensor read_wdt(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("wdt: cannot open: " + path.string());
    char magic[4] = {};
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("wdt: bad magic in " + path.string() + " (expected WDT1)");
    std::uint8_t dtype = 0, ndim = 0;
    in.read(reinterpret_cast<char*>(&dtype), 1);
    in.read(reinterpret_cast<char*>(&ndim), 1);
    if (!in || dtype != kDtypeF32) throw IoError("wdt: unsupported dtype in " + path.string());
    if (ndim == 0) throw IoError("wdt: zero-rank tensor in " + path.string());
    std::vector<int> shape(ndim);
    std::int64_t numel = 1;
    for (int i = 0; i < ndim; ++i) {
        std::uint32_t v = 0;
        in.read(reinterpret_cast<char*>(&v), 4);
        if (!in || v > (1u << 30)) throw IoError("wdt: bad dimension in " + path.string());
        shape[static_cast<size_t>(i)] = static_cast<int>(v);
        numel *= v;
    }
    Tensor t(shape);
    in.read(reinterpret_cast<char*>(t.ptr()), static_cast<std::streamsize>(numel * 4));
    if (!in || in.gcount() != static_cast<std::streamsize>(numel * 4))
        throw IoError("wdt: truncated payload in " + path.string());
    return t;
}

} // namespace wf

#include <bit>
#include <cstring>
#include <fstream>

#include "anisogpe/errors.hpp"
#include "anisogpe/field.hpp"

namespace anisogpe {

namespace {

constexpr char kMagic[4] = {'G', 'P', 'E', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int k = 0; k < 4; ++k) b[k] = static_cast<unsigned char>(v >> (8 * k));
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double x) {
    const auto v = std::bit_cast<std::uint64_t>(x);
    unsigned char b[8];
    for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>(v >> (8 * k));
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) throw std::runtime_error("load_field: truncated header");
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(b[k]) << (8 * k);
    return v;
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error("load_field: truncated payload");
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(b[k]) << (8 * k);
    return std::bit_cast<double>(v);
}

}  // namespace

void save_field(const WaveField& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_field: cannot open " + path);
    const auto d = f.grid().dims();
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    for (int a = 0; a < 3; ++a) put_u32(os, static_cast<std::uint32_t>(d[a]));
    const auto rep = static_cast<char>(f.representation());
    os.write(&rep, 1);
    for (const auto& v : f.data()) {
        put_f64(os, v.real());
        put_f64(os, v.imag());
    }
    if (!os) throw std::runtime_error("save_field: write failed for " + path);
}

WaveField load_field(GridPtr grid, const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_field: cannot open " + path);
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("load_field: bad magic in " + path);
    if (get_u32(is) != kVersion) throw std::runtime_error("load_field: unsupported version");
    const auto d = grid->dims();
    for (int a = 0; a < 3; ++a)
        if (get_u32(is) != static_cast<std::uint32_t>(d[a])) throw GridMismatch("load_field: dimensions differ");
    char rep = 0;
    if (!is.read(&rep, 1) || static_cast<unsigned char>(rep) > 3)
        throw std::runtime_error("load_field: bad representation tag");
    std::vector<cplx> data(grid->size());
    for (auto& v : data) {
        const double re = get_f64(is);
        v = cplx(re, get_f64(is));
    }
    return WaveField(std::move(grid), static_cast<Representation>(rep), std::move(data));
}

}  // namespace anisogpe

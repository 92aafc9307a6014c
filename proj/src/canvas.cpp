#include "fresco/canvas.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace fresco {

double canvas_mse(const Canvas& a, const Canvas& b) {
    if (!a.same_shape(b)) {
        throw std::invalid_argument("canvas_mse: shape mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double diff = a.data[i] - b.data[i];
        acc += diff * diff;
    }
    return acc / static_cast<double>(a.data.size());
}

void canvas_moments(const Canvas& c, double& mean, double& variance) {
    double sum = 0.0, sum_sq = 0.0;
    for (double v : c.data) {
        sum += v;
        sum_sq += v * v;
    }
    const double n = static_cast<double>(c.data.size());
    mean = sum / n;
    variance = sum_sq / n - mean * mean;
}

namespace {

void put_u32(std::ofstream& out, std::uint32_t v) {
    unsigned char bytes[4] = {static_cast<unsigned char>(v & 0xFF),
                              static_cast<unsigned char>((v >> 8) & 0xFF),
                              static_cast<unsigned char>((v >> 16) & 0xFF),
                              static_cast<unsigned char>((v >> 24) & 0xFF)};
    out.write(reinterpret_cast<const char*>(bytes), 4);
}

std::uint32_t get_u32(std::ifstream& in) {
    unsigned char bytes[4];
    in.read(reinterpret_cast<char*>(bytes), 4);
    return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
           (static_cast<std::uint32_t>(bytes[2]) << 16) |
           (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace

void write_canvas(const Canvas& canvas, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_canvas: cannot open " + path);
    }
    out.write("FRSC", 4);
    put_u32(out, static_cast<std::uint32_t>(canvas.height));
    put_u32(out, static_cast<std::uint32_t>(canvas.width));
    put_u32(out, static_cast<std::uint32_t>(canvas.channels));
    for (double v : canvas.data) {
        const float f = static_cast<float>(v);
        std::uint32_t bits;
        std::memcpy(&bits, &f, 4);
        put_u32(out, bits);
    }
    if (!out) {
        throw std::runtime_error("write_canvas: write failed for " + path);
    }
}

Canvas read_canvas(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_canvas: cannot open " + path);
    }
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "FRSC", 4) != 0) {
        throw std::runtime_error("read_canvas: bad magic in " + path);
    }
    const std::uint32_t h = get_u32(in);
    const std::uint32_t w = get_u32(in);
    const std::uint32_t d = get_u32(in);
    if (!in || h == 0 || w == 0 || d == 0 || h > 1u << 16 || w > 1u << 16 || d > 1u << 16) {
        throw std::runtime_error("read_canvas: bad dimensions in " + path);
    }
    Canvas canvas(static_cast<int>(h), static_cast<int>(w), static_cast<int>(d));
    for (double& v : canvas.data) {
        const std::uint32_t bits = get_u32(in);
        float f;
        std::memcpy(&f, &bits, 4);
        v = static_cast<double>(f);
    }
    if (!in) {
        throw std::runtime_error("read_canvas: truncated payload in " + path);
    }
    return canvas;
}

}  // namespace fresco

#pragma once

#include <string>
#include <vector>

namespace fresco {

// Dense H x W x D field, row-major with the channel index fastest.
struct Canvas {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> data;

    Canvas() = default;
    Canvas(int h, int w, int d)
        : height(h), width(w), channels(d),
          data(static_cast<std::size_t>(h) * w * d, 0.0) {}

    double& at(int y, int x, int d) {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + d];
    }
    double at(int y, int x, int d) const {
        return data[(static_cast<std::size_t>(y) * width + x) * channels + d];
    }

    std::size_t size() const { return data.size(); }

    bool same_shape(const Canvas& other) const {
        return height == other.height && width == other.width && channels == other.channels;
    }
};

// Mean squared difference over all cells. Throws on shape mismatch.
double canvas_mse(const Canvas& a, const Canvas& b);

// Mean and population variance over all cells of one canvas.
void canvas_moments(const Canvas& c, double& mean, double& variance);

// Binary dump format: magic "FRSC", then u32 height, u32 width, u32 channels
// (little-endian), then height*width*channels little-endian IEEE-754 f32
// values, row-major, channel fastest. Values are narrowed to f32 on write.
void write_canvas(const Canvas& canvas, const std::string& path);
Canvas read_canvas(const std::string& path);

}  // namespace fresco

#include "fresco/noise_field.hpp"

#include <stdexcept>
#include <string>

#include "fresco/rng.hpp"

namespace fresco {

NoiseField::NoiseField(std::uint64_t master_seed, int height, int width, int channels)
    : master_seed_(master_seed), height_(height), width_(width), channels_(channels) {
    if (height <= 0 || width <= 0 || channels <= 0) {
        throw std::invalid_argument("NoiseField: canvas dimensions must be positive");
    }
}

void NoiseField::check_bounds(const FieldCoord& coord) const {
    if (coord.y < 0 || coord.y >= height_ || coord.x < 0 || coord.x >= width_ ||
        coord.d < 0 || coord.d >= channels_) {
        throw std::out_of_range("NoiseField: coord (" + std::to_string(coord.y) + "," +
                                std::to_string(coord.x) + "," + std::to_string(coord.d) +
                                ") outside canvas");
    }
}

std::uint64_t NoiseField::hash_coord(const FieldCoord& coord) const {
    check_bounds(coord);
    std::uint64_t s = master_seed_;
    s = mix64(absorb(s, static_cast<std::uint64_t>(coord.y)));
    s = mix64(absorb(s, static_cast<std::uint64_t>(coord.x)));
    s = mix64(absorb(s, static_cast<std::uint64_t>(coord.d)));
    return s;
}

double NoiseField::sample_unit_gaussian(const FieldCoord& coord) const {
    return digest_to_gaussian(hash_coord(coord));
}

double NoiseField::sample_block(int level, int block_row, int block_col, int d) const {
    if (level < 0) {
        throw std::invalid_argument("NoiseField: negative level");
    }
    const int side = 1 << level;
    const int y0 = block_row * side;
    const int x0 = block_col * side;
    if (y0 < 0 || x0 < 0 || y0 + side > height_ || x0 + side > width_) {
        throw std::out_of_range("NoiseField: block outside canvas");
    }
    if (level == 0) {
        return sample_unit_gaussian({y0, x0, d});
    }
    double sum = 0.0;
    for (int y = y0; y < y0 + side; ++y) {
        for (int x = x0; x < x0 + side; ++x) {
            sum += sample_unit_gaussian({y, x, d});
        }
    }
    // mean * 2^level == sum / 2^level
    return sum / static_cast<double>(side);
}

}  // namespace fresco

#pragma once

#include <cstdint>

namespace fresco {

// Address of one cell on the finest grid: row, column, channel.
struct FieldCoord {
    int y = 0;
    int x = 0;
    int d = 0;
};

// Deterministic coordinate-addressed Gaussian noise field.
//
// Every finest-grid cell (y, x, d) owns one fixed unit-Gaussian value that is
// a pure function of (master_seed, y, x, d). The field holds no state beyond
// its seed and canvas dimensions, so queries are bit-identical across calls,
// runs, and threads, and the descriptor round-trips through serialization
// without affecting any output.
//
// Digest rule (frozen; see rng.hpp for the mix64/absorb constants):
//   s = master_seed
//   s = mix64(absorb(s, y)); s = mix64(absorb(s, x)); s = mix64(absorb(s, d))
// Gaussian rule: split the digest into two 32-bit uniforms offset into (0,1),
// apply Box-Muller, keep the cosine output.
class NoiseField {
public:
    NoiseField(std::uint64_t master_seed, int height, int width, int channels);

    std::uint64_t master_seed() const { return master_seed_; }
    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }

    // 64-bit digest of (master_seed, coord). Throws std::out_of_range when
    // the coord lies outside the canvas.
    std::uint64_t hash_coord(const FieldCoord& coord) const;

    // Fixed N(0,1) deviate for one fine cell.
    double sample_unit_gaussian(const FieldCoord& coord) const;

    // Noise value of the 2^level x 2^level block anchored at
    // (block_row * 2^level, block_col * 2^level): the mean of the block's
    // fine-cell Gaussians, scaled by 2^level so the result is again unit
    // variance. level 0 reduces to sample_unit_gaussian. The scaling makes
    // coarse and fine queries consistent realizations of one field: a block
    // value times 2^level is exactly the sum of its cells' values.
    double sample_block(int level, int block_row, int block_col, int d) const;

private:
    void check_bounds(const FieldCoord& coord) const;

    std::uint64_t master_seed_;
    int height_;
    int width_;
    int channels_;
};

}  // namespace fresco

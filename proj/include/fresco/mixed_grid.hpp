#pragma once

#include <compare>
#include <deque>
#include <vector>

#include "fresco/canvas.hpp"
#include "fresco/noise_field.hpp"

namespace fresco {

// Address of one token in the quadtree over the finest grid. level 0 is the
// finest; a level-L token covers a 2^L x 2^L fine-cell footprint anchored at
// (row * 2^L, col * 2^L).
struct TokenCoord {
    int level = 0;
    int row = 0;
    int col = 0;

    auto operator<=>(const TokenCoord&) const = default;
};

// One live token: its address, current D-channel value, and a bounded
// history of post-step values (oldest first) feeding the variance gate.
struct LatentToken {
    TokenCoord coord;
    std::vector<double> value;
    std::deque<std::vector<double>> history;
};

// Live latent state: a set of tokens at heterogeneous levels whose fine-grid
// footprints tile the canvas exactly. Single-writer; concurrent readers are
// fine between mutations.
class MixedGrid {
public:
    MixedGrid(int height, int width, int channels, int history_window);

    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }
    int history_window() const { return history_window_; }

    double time() const { return time_; }
    void set_time(double t) { time_ = t; }

    const std::vector<LatentToken>& tokens() const { return tokens_; }
    std::vector<LatentToken>& tokens() { return tokens_; }

    // Index into tokens() for a coord, or -1 when absent.
    int find(const TokenCoord& coord) const;

    // Appends every token's current value to its history, evicting the
    // oldest entry once the window is full.
    void record_step();

    // True when token footprints tile the canvas with no gap or overlap and
    // no coord appears twice.
    bool partition_holds() const;

    // Nearest-neighbor expansion of the token values onto the fine grid:
    // a level-L token's value fills its whole 2^L x 2^L footprint verbatim.
    // Throws std::logic_error if the partition property is violated.
    Canvas assemble_canvas() const;

private:
    int height_;
    int width_;
    int channels_;
    int history_window_;
    double time_ = 1.0;
    std::vector<LatentToken> tokens_;
};

// Fully tiled grid at one level, token values taken from the unified field
// via sample_block, time set to 1 (the pure-noise end of the interval).
// Throws std::invalid_argument when the canvas is not divisible by 2^level.
MixedGrid init_grid(int level, const NoiseField& field, int history_window);

}  // namespace fresco

#include "fresco/mixed_grid.hpp"

#include <stdexcept>

namespace fresco {

MixedGrid::MixedGrid(int height, int width, int channels, int history_window)
    : height_(height), width_(width), channels_(channels), history_window_(history_window) {
    if (height <= 0 || width <= 0 || channels <= 0) {
        throw std::invalid_argument("MixedGrid: canvas dimensions must be positive");
    }
    if (history_window < 2) {
        throw std::invalid_argument("MixedGrid: history window must be >= 2");
    }
}

int MixedGrid::find(const TokenCoord& coord) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].coord == coord) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

void MixedGrid::record_step() {
    for (LatentToken& token : tokens_) {
        token.history.push_back(token.value);
        if (static_cast<int>(token.history.size()) > history_window_) {
            token.history.pop_front();
        }
    }
}

bool MixedGrid::partition_holds() const {
    std::vector<int> cover(static_cast<std::size_t>(height_) * width_, 0);
    for (const LatentToken& token : tokens_) {
        const int side = 1 << token.coord.level;
        const int y0 = token.coord.row * side;
        const int x0 = token.coord.col * side;
        if (y0 < 0 || x0 < 0 || y0 + side > height_ || x0 + side > width_) {
            return false;
        }
        for (int y = y0; y < y0 + side; ++y) {
            for (int x = x0; x < x0 + side; ++x) {
                ++cover[static_cast<std::size_t>(y) * width_ + x];
            }
        }
    }
    for (int c : cover) {
        if (c != 1) {
            return false;
        }
    }
    return true;
}

Canvas MixedGrid::assemble_canvas() const {
    if (!partition_holds()) {
        throw std::logic_error("MixedGrid: partition property violated");
    }
    Canvas canvas(height_, width_, channels_);
    for (const LatentToken& token : tokens_) {
        const int side = 1 << token.coord.level;
        const int y0 = token.coord.row * side;
        const int x0 = token.coord.col * side;
        for (int y = y0; y < y0 + side; ++y) {
            for (int x = x0; x < x0 + side; ++x) {
                for (int d = 0; d < channels_; ++d) {
                    canvas.at(y, x, d) = token.value[d];
                }
            }
        }
    }
    return canvas;
}

MixedGrid init_grid(int level, const NoiseField& field, int history_window) {
    if (level < 0) {
        throw std::invalid_argument("init_grid: negative level");
    }
    const int side = 1 << level;
    if (field.height() % side != 0 || field.width() % side != 0) {
        throw std::invalid_argument("init_grid: canvas not divisible by 2^level");
    }
    MixedGrid grid(field.height(), field.width(), field.channels(), history_window);
    const int rows = field.height() / side;
    const int cols = field.width() / side;
    grid.tokens().reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            LatentToken token;
            token.coord = {level, r, c};
            token.value.resize(field.channels());
            for (int d = 0; d < field.channels(); ++d) {
                token.value[d] = field.sample_block(level, r, c, d);
            }
            grid.tokens().push_back(std::move(token));
        }
    }
    grid.set_time(1.0);
    return grid;
}

}  // namespace fresco

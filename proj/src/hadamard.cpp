#include "fresco/hadamard.hpp"

#include <stdexcept>

namespace fresco {

std::array<TokenCoord, 4> child_coords(const TokenCoord& parent) {
    if (parent.level < 1) {
        throw std::invalid_argument("child_coords: level-0 token cannot expand");
    }
    const int level = parent.level - 1;
    const int r = 2 * parent.row;
    const int c = 2 * parent.col;
    return {TokenCoord{level, r, c}, TokenCoord{level, r, c + 1}, TokenCoord{level, r + 1, c},
            TokenCoord{level, r + 1, c + 1}};
}

std::array<std::vector<double>, 4> expand_token(const ExpansionInput& input) {
    const std::size_t channels = input.parent_value.size();
    const std::vector<double>* eps[3] = {&input.eps1, &input.eps2, &input.eps3};
    for (const auto* e : eps) {
        if (e->size() != channels) {
            throw std::invalid_argument("expand_token: vector length mismatch");
        }
    }
    std::array<std::vector<double>, 4> children;
    for (int k = 0; k < 4; ++k) {
        children[k].resize(channels);
        for (std::size_t d = 0; d < channels; ++d) {
            double v = input.parent_value[d];
            for (int j = 0; j < 3; ++j) {
                v += kHadamard4[k][j + 1] * input.detail_scale * (*eps[j])[d];
            }
            children[k][d] = v;
        }
    }
    return children;
}

void promote(MixedGrid& grid, const std::vector<TokenCoord>& coords, const NoiseField& field,
             double sigma_detail) {
    for (const TokenCoord& coord : coords) {
        const int index = grid.find(coord);
        if (index < 0) {
            throw std::invalid_argument("promote: stale selection, token not active");
        }
        const auto children = child_coords(coord);  // throws for level 0

        ExpansionInput input;
        input.parent_value = grid.tokens()[index].value;
        input.detail_scale = sigma_detail;
        input.eps1.resize(grid.channels());
        input.eps2.resize(grid.channels());
        input.eps3.resize(grid.channels());
        std::vector<double>* eps[3] = {&input.eps1, &input.eps2, &input.eps3};
        for (int j = 0; j < 3; ++j) {
            // anchor fine cell of child j+1
            const TokenCoord& child = children[j + 1];
            const int side = 1 << child.level;
            for (int d = 0; d < grid.channels(); ++d) {
                (*eps[j])[d] =
                    field.sample_unit_gaussian({child.row * side, child.col * side, d});
            }
        }
        const auto values = expand_token(input);

        grid.tokens().erase(grid.tokens().begin() + index);
        for (int k = 0; k < 4; ++k) {
            LatentToken token;
            token.coord = children[k];
            token.value = values[k];
            grid.tokens().insert(grid.tokens().begin() + index + k, std::move(token));
        }
    }
}

}  // namespace fresco

#pragma once

#include <array>
#include <vector>

#include "fresco/mixed_grid.hpp"
#include "fresco/noise_field.hpp"

namespace fresco {

// 4x4 Hadamard matrix used for token expansion. Rows:
//   + + + +
//   + - + -
//   + + - -
//   + - - +
// Satisfies H4 * H4^T = 4 * I exactly.
inline constexpr std::array<std::array<int, 4>, 4> kHadamard4 = {{
    {{1, 1, 1, 1}},
    {{1, -1, 1, -1}},
    {{1, 1, -1, -1}},
    {{1, -1, -1, 1}},
}};

// Inputs to one token expansion: the parent value, the detail scale applied
// to the noise columns, and the three noise vectors.
struct ExpansionInput {
    std::vector<double> parent_value;
    double detail_scale = 0.0;
    std::vector<double> eps1;
    std::vector<double> eps2;
    std::vector<double> eps3;
};

// The four level-(L-1) blocks tiling a level-L parent, in fixed row-major
// order: (2r,2c), (2r,2c+1), (2r+1,2c), (2r+1,2c+1). Throws
// std::invalid_argument for a level-0 parent.
std::array<TokenCoord, 4> child_coords(const TokenCoord& parent);

// Hadamard expansion of one parent into four children:
//   child_k = parent +/- s*eps1 +/- s*eps2 +/- s*eps3   (signs from kHadamard4)
// The all-ones first row makes (z1+z2+z3+z4)/4 equal the parent exactly; with
// unit-Gaussian eps the per-child detail deviation has variance 3*s^2 per
// channel.
std::array<std::vector<double>, 4> expand_token(const ExpansionInput& input);

// Replaces each listed parent token with its four children. Child values
// come from expand_token with eps1..eps3 drawn deterministically from the
// unified field at the anchor fine cells of children 2, 3 and 4 (channel by
// channel), so promotion is bit-reproducible given the field. Children start
// with empty histories. Throws std::invalid_argument when a coord is not an
// active token or sits at level 0.
void promote(MixedGrid& grid, const std::vector<TokenCoord>& coords, const NoiseField& field,
             double sigma_detail);

}  // namespace fresco

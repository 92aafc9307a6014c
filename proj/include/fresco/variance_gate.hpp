#pragma once

#include <deque>
#include <vector>

#include "fresco/mixed_grid.hpp"

namespace fresco {

// Promotion gate parameters.
//   tau      variance threshold; a token is converged when its temporal
//            variance is <= tau.
//   rho_max  cap on the fraction of active tokens promotable per step.
//   window   history length required before a token becomes eligible,
//            matching the grid's history window.
struct GateConfig {
    double tau = 0.0;
    double rho_max = 0.25;
    int window = 4;

    void validate() const;
};

// Temporal variance of one token: population variance over the time axis per
// channel, averaged over channels. Throws std::invalid_argument when fewer
// than two history entries exist.
double token_variance(const std::deque<std::vector<double>>& history);

// Coords of converged tokens, ready to promote: level > 0, full history
// window, variance <= tau. Sorted ascending by variance, ties broken by
// (level descending, row, col), truncated to floor(rho_max * active tokens).
// Pure selection; nothing is promoted here.
std::vector<TokenCoord> select_promotions(const MixedGrid& grid, const GateConfig& cfg);

}  // namespace fresco

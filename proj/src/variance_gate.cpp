#include "fresco/variance_gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fresco {

void GateConfig::validate() const {
    if (std::isnan(tau) || tau < 0.0) {  // +inf is a valid "gate wide open" value
        throw std::invalid_argument("GateConfig: tau must be >= 0");
    }
    if (!(rho_max > 0.0) || rho_max > 1.0) {
        throw std::invalid_argument("GateConfig: rho_max must lie in (0, 1]");
    }
    if (window < 2) {
        throw std::invalid_argument("GateConfig: window must be >= 2");
    }
}

double token_variance(const std::deque<std::vector<double>>& history) {
    const int steps = static_cast<int>(history.size());
    if (steps < 2) {
        throw std::invalid_argument("token_variance: need at least 2 history entries");
    }
    const int channels = static_cast<int>(history.front().size());
    double total = 0.0;
    for (int d = 0; d < channels; ++d) {
        double sum = 0.0, sum_sq = 0.0;
        for (const auto& entry : history) {
            sum += entry[d];
            sum_sq += entry[d] * entry[d];
        }
        const double mean = sum / steps;
        total += sum_sq / steps - mean * mean;
    }
    return std::max(0.0, total / channels);
}

std::vector<TokenCoord> select_promotions(const MixedGrid& grid, const GateConfig& cfg) {
    cfg.validate();

    struct Candidate {
        double variance;
        TokenCoord coord;
    };
    std::vector<Candidate> candidates;
    for (const LatentToken& token : grid.tokens()) {
        if (token.coord.level == 0) {
            continue;
        }
        if (static_cast<int>(token.history.size()) < cfg.window) {
            continue;  // not enough history; never promoted this step
        }
        const double v = token_variance(token.history);
        if (v <= cfg.tau) {
            candidates.push_back({v, token.coord});
        }
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.variance != b.variance) {
            return a.variance < b.variance;
        }
        if (a.coord.level != b.coord.level) {
            return a.coord.level > b.coord.level;
        }
        if (a.coord.row != b.coord.row) {
            return a.coord.row < b.coord.row;
        }
        return a.coord.col < b.coord.col;
    });

    const std::size_t cap = static_cast<std::size_t>(
        std::floor(cfg.rho_max * static_cast<double>(grid.tokens().size())));
    if (candidates.size() > cap) {
        candidates.resize(cap);
    }

    std::vector<TokenCoord> out;
    out.reserve(candidates.size());
    for (const Candidate& c : candidates) {
        out.push_back(c.coord);
    }
    return out;
}

}  // namespace fresco

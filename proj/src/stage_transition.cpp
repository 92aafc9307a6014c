#include "fresco/stage_transition.hpp"

#include <cmath>
#include <stdexcept>

#include "fresco/rng.hpp"

namespace fresco {

namespace {

void check_spec(const TransitionSpec& spec) {
    if (spec.t_start < 0.0 || spec.t_end > 1.0 || spec.t_end < spec.t_start) {
        throw std::invalid_argument("TransitionSpec: need 0 <= t_start <= t_end <= 1");
    }
}

}  // namespace

double TransitionSpec::beta() const {
    if (t_end == t_start) {
        return 1.0;  // identity transition, also covers t_start == 1
    }
    return (1.0 - t_end) / (1.0 - t_start);
}

double TransitionSpec::alpha() const {
    if (t_end == t_start) {
        return 0.0;
    }
    const double b = beta();
    if (kind == RenoiseKind::unified) {
        return t_end - b * t_start;
    }
    // clamp guards floating-point underflow when t_end is barely above t_start
    return std::sqrt(std::max(0.0, t_end * t_end - b * b * t_start * t_start));
}

TransitionSpec TransitionSpec::unified(double t_start, double t_end) {
    return TransitionSpec{t_start, t_end, RenoiseKind::unified};
}

TransitionSpec TransitionSpec::independent(double t_start, double t_end) {
    return TransitionSpec{t_start, t_end, RenoiseKind::independent};
}

void unified_renoise(MixedGrid& grid, const TransitionSpec& spec, const NoiseField& field) {
    check_spec(spec);
    if (spec.kind != RenoiseKind::unified) {
        throw std::invalid_argument("unified_renoise: spec is not the unified variant");
    }
    const double beta = spec.beta();
    const double alpha = spec.alpha();
    for (LatentToken& token : grid.tokens()) {
        for (int d = 0; d < grid.channels(); ++d) {
            const double eps =
                field.sample_block(token.coord.level, token.coord.row, token.coord.col, d);
            token.value[d] = beta * token.value[d] + alpha * eps;
        }
        token.history.clear();
    }
    grid.set_time(spec.t_end);
}

void independent_renoise(MixedGrid& grid, const TransitionSpec& spec, std::uint64_t rng_seed) {
    check_spec(spec);
    if (spec.kind != RenoiseKind::independent) {
        throw std::invalid_argument("independent_renoise: spec is not the independent variant");
    }
    const double beta = spec.beta();
    const double alpha = spec.alpha();
    GaussianStream stream(rng_seed);
    for (LatentToken& token : grid.tokens()) {
        for (int d = 0; d < grid.channels(); ++d) {
            token.value[d] = beta * token.value[d] + alpha * stream.next();
        }
        token.history.clear();
    }
    grid.set_time(spec.t_end);
}

void unified_renoise_canvas(Canvas& canvas, int level, const TransitionSpec& spec,
                            const NoiseField& field) {
    check_spec(spec);
    const double beta = spec.beta();
    const double alpha = spec.alpha();
    for (int y = 0; y < canvas.height; ++y) {
        for (int x = 0; x < canvas.width; ++x) {
            for (int d = 0; d < canvas.channels; ++d) {
                canvas.at(y, x, d) =
                    beta * canvas.at(y, x, d) + alpha * field.sample_block(level, y, x, d);
            }
        }
    }
}

void independent_renoise_canvas(Canvas& canvas, const TransitionSpec& spec,
                                std::uint64_t rng_seed) {
    check_spec(spec);
    const double beta = spec.beta();
    const double alpha = spec.alpha();
    GaussianStream stream(rng_seed);
    for (double& v : canvas.data) {
        v = beta * v + alpha * stream.next();
    }
}

}  // namespace fresco
